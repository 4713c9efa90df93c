#include <chw/lattice.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace chw {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t rank, Gen i) {
  require_generator(i, rank);
  LatticeVector v(rank);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Integer& c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& rhs) {
  require_same_rank(rank(), rhs.rank());
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& rhs) {
  require_same_rank(rank(), rhs.rank());
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols_if_empty) {
  IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(m.cols_));
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw RankMismatch(rows_ * cols_, rhs.rows_ * rhs.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw RankMismatch(rows_ * cols_, rhs.rows_ * rhs.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same_rank(a.cols(), b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  require_same_rank(a.cols(), v.rank());
  LatticeVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& d, std::size_t s) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t r = s; r < d.rows(); ++r)
    for (std::size_t c = s; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Integer v = abs(d(r, c));
      if (!best || v < best_abs) {
        best = Pivot{r, c};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols()), {}};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  IntMatrix& Vi = res.V_inverse;

  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    D.add_col(dst, src, k);
    V.add_col(dst, src, k);
    Vi.add_row(src, dst, -k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    D.add_row(dst, src, k);
    U.add_row(dst, src, k);
  };

  const std::size_t steps = std::min(D.rows(), D.cols());
  for (std::size_t s = 0; s < steps; ++s) {
    bool exhausted = false;
    for (;;) {
      auto p = smallest_entry(D, s);
      if (!p) {
        exhausted = true;
        break;
      }
      row_swap(s, p->row);
      col_swap(s, p->col);

      bool clear = true;
      for (std::size_t r = s + 1; r < D.rows(); ++r) {
        if (D(r, s) == 0) continue;
        Integer q = D(r, s) / D(s, s);
        row_add(r, s, -q);
        if (D(r, s) != 0) clear = false;
      }
      for (std::size_t c = s + 1; c < D.cols(); ++c) {
        if (D(s, c) == 0) continue;
        Integer q = D(s, c) / D(s, s);
        col_add(c, s, -q);
        if (D(s, c) != 0) clear = false;
      }
      if (!clear) continue;

      std::optional<std::size_t> offending;
      for (std::size_t r = s + 1; r < D.rows() && !offending; ++r)
        for (std::size_t c = s + 1; c < D.cols(); ++c)
          if (D(r, c) % D(s, s) != 0) {
            offending = r;
            break;
          }
      if (offending) {
        row_add(s, *offending, 1);
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (D(s, s) < 0) {
      D.negate_row(s);
      U.negate_row(s);
    }
    res.factors.push_back(D(s, s));
  }
  return res;
}

std::vector<LatticeVector> hermite_basis(std::vector<LatticeVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t dim = vectors.front().rank();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < dim && pivot_row < vectors.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      std::size_t nonzero = 0;
      for (std::size_t r = pivot_row; r < vectors.size(); ++r) {
        if (vectors[r][c] == 0) continue;
        ++nonzero;
        if (!best || abs(vectors[r][c]) < abs(vectors[*best][c])) best = r;
      }
      if (nonzero == 0) break;
      std::swap(vectors[pivot_row], vectors[*best]);
      if (nonzero == 1) break;
      for (std::size_t r = pivot_row + 1; r < vectors.size(); ++r) {
        if (vectors[r][c] == 0) continue;
        Integer q = vectors[r][c] / vectors[pivot_row][c];
        vectors[r] -= q * vectors[pivot_row];
      }
    }
    if (vectors[pivot_row][c] == 0) continue;
    if (vectors[pivot_row][c] < 0) vectors[pivot_row] = -vectors[pivot_row];
    const Integer& p = vectors[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), vectors[r][c].get_mpz_t(), p.get_mpz_t());
      vectors[r] -= q * vectors[pivot_row];
    }
    ++pivot_row;
  }
  vectors.resize(pivot_row);
  return vectors;
}

std::vector<LatticeVector> kernel_basis(const IntMatrix& m) {
  const SNFResult snf = smith_normal_form(m);
  std::vector<LatticeVector> basis;
  for (std::size_t c = snf.rank(); c < m.cols(); ++c)
    basis.emplace_back(snf.V.col(c));
  return hermite_basis(std::move(basis));
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  const SNFResult snf = smith_normal_form(m);
  CokernelInvariants out;
  out.free_rank = m.rows() - snf.rank();
  for (const auto& d : snf.factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

IntMatrix rho(Gen i, std::size_t n) {
  require_generator(i, n);
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = (k == static_cast<std::size_t>(i - 1)) ? 1 : -1;
  return m;
}

IntMatrix rho(const ReducedWord& w) {
  const auto s = sign_vector(w);
  IntMatrix m(w.rank(), w.rank());
  for (std::size_t k = 0; k < s.size(); ++k) m(k, k) = s[k];
  return m;
}

LatticeVector act(const ReducedWord& w, const LatticeVector& z) {
  require_same_rank(w.rank(), z.rank());
  const auto s = sign_vector(w);
  LatticeVector out = z;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] < 0) out[k] = -out[k];
  return out;
}

std::vector<LatticeVector> fixed_sublattice(std::span<const ReducedWord> generators) {
  if (generators.empty())
    throw std::invalid_argument("fixed_sublattice needs at least one generator");
  const std::size_t n = generators.front().rank();
  IntMatrix stacked(n * generators.size(), n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    require_same_rank(generators[g].rank(), n);
    IntMatrix block = rho(generators[g]) - IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(g * n + r, c) = block(r, c);
  }
  return kernel_basis(stacked);
}

bool commutant_is_diagonal(std::size_t n) {
  // Unknown X is flattened row-major; one constraint row per (i, a, b)
  // entry of X rho(i) - rho(i) X.
  IntMatrix constraints(n * n * n, n * n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i) {
    const IntMatrix r = rho(i, n);
    const std::size_t block = static_cast<std::size_t>(i - 1) * n * n;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t row = block + a * n + b;
        for (std::size_t k = 0; k < n; ++k) {
          constraints(row, a * n + k) += r(k, b);
          constraints(row, k * n + b) -= r(a, k);
        }
      }
  }
  for (const auto& v : kernel_basis(constraints))
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && v[a * n + b] != 0) return false;
  return true;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.rank(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace chw
