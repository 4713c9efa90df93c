#include <chw/cohomology.hpp>

#include <chw/translation_monoid.hpp>

#include <optional>
#include <stdexcept>

namespace chw {

namespace {

// Integer solution of m y = v, if one exists.
std::optional<LatticeVector> solve_integer(const IntMatrix& m, const LatticeVector& v) {
  require_same_rank(m.rows(), v.rank());
  const SNFResult snf = smith_normal_form(m);
  const LatticeVector uv = snf.U * v;
  LatticeVector y(m.cols());
  for (std::size_t t = 0; t < m.rows(); ++t) {
    if (t < snf.rank()) {
      if (uv[t] % snf.factors[t] != 0) return std::nullopt;
      y[t] = uv[t] / snf.factors[t];
    } else if (uv[t] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

IntMatrix columns_to_matrix(const std::vector<LatticeVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

void require_involution(const IntMatrix& sigma) {
  if (!sigma.square() || sigma * sigma != IntMatrix::identity(sigma.rows()))
    throw std::invalid_argument("h2_cyclic expects an involution (sigma^2 = I)");
}

}  // namespace

std::vector<Integer> h2_cyclic(const IntMatrix& sigma) {
  require_involution(sigma);
  const std::size_t n = sigma.rows();
  const IntMatrix id = IntMatrix::identity(n);
  const auto fixed = kernel_basis(sigma - id);
  if (fixed.empty()) return {};

  // Norms (sigma + I) A lie in the fixed lattice; express them in its basis.
  const IntMatrix basis = columns_to_matrix(fixed, n);
  const IntMatrix norm = sigma + id;
  IntMatrix coords(fixed.size(), n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto y = solve_integer(basis, LatticeVector(norm.col(c)));
    if (!y) throw std::logic_error("norm image escapes the fixed lattice");
    for (std::size_t r = 0; r < fixed.size(); ++r) coords(r, c) = (*y)[r];
  }
  return cokernel_invariants(coords).torsion;
}

std::vector<std::vector<Integer>> h2_w(std::size_t n) {
  if (n < 2) throw std::invalid_argument("h2_w needs n >= 2");
  std::vector<std::vector<Integer>> out;
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i) out.push_back(h2_cyclic(rho(i, n)));
  return out;
}

bool is_torsion_free_class(const CohClass& c) {
  for (int b : c.bits)
    if (b % 2 == 0) return false;
  return true;
}

std::vector<CohClass> torsion_free_classes(std::size_t n) {
  if (n >= 8 * sizeof(unsigned long) - 1)
    throw ResourceLimit("too many classes to enumerate");
  std::vector<CohClass> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    CohClass c{std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) c.bits[i] = static_cast<int>((mask >> (n - 1 - i)) & 1UL);
    if (is_torsion_free_class(c)) out.push_back(std::move(c));
  }
  return out;
}

CohClass extension_class(std::size_t n) {
  if (n < 2) throw std::invalid_argument("extension_class needs n >= 2");
  CohClass c{std::vector<int>(n)};
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i) {
    const IntMatrix norm = rho(i, n) + IntMatrix::identity(n);
    // x_i^2 is the square of the lift x_i; its class vanishes iff it is a norm.
    const bool is_norm = solve_integer(norm, LatticeVector::unit(n, i)).has_value();
    c.bits[static_cast<std::size_t>(i - 1)] = is_norm ? 0 : 1;
  }
  return c;
}

IntMatrix iota_image_matrix(std::size_t n) {
  IntMatrix m(n * (n - 1), n);
  for (Gen k = 1; k <= static_cast<Gen>(n); ++k) {
    const TranslationMatrix image = iota(LatticeVector::unit(n, k));
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m(row++, static_cast<std::size_t>(k - 1)) = image(i, j);
  }
  return m;
}

CokernelInvariants h1_w(std::size_t n) {
  if (n < 3) throw std::invalid_argument("h1_w needs n >= 3");
  return cokernel_invariants(iota_image_matrix(n));
}

std::string format_abelian(const CokernelInvariants& inv) {
  std::vector<std::string> parts;
  if (inv.free_rank == 1)
    parts.emplace_back("Z");
  else if (inv.free_rank > 1)
    parts.push_back("Z^" + std::to_string(inv.free_rank));
  for (std::size_t k = 0; k < inv.torsion.size();) {
    std::size_t run = k;
    while (run < inv.torsion.size() && inv.torsion[run] == inv.torsion[k]) ++run;
    const std::string cyclic = "Z/" + inv.torsion[k].get_str();
    const std::size_t count = run - k;
    parts.push_back(count == 1 ? cyclic : "(" + cyclic + ")^" + std::to_string(count));
    k = run;
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " x " + parts[k];
  return out;
}

}  // namespace chw
