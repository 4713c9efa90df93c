#include <chw/translation_monoid.hpp>

#include <stdexcept>

namespace chw {

TranslationMatrix::TranslationMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("translation matrix must be square");
}

TranslationMatrix TranslationMatrix::epsilon(std::size_t n, Gen i, Gen j) {
  require_generator(i, n);
  require_generator(j, n);
  if (i == j) throw std::invalid_argument("epsilon_ij needs i != j");
  TranslationMatrix a(n);
  a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  return a;
}

TranslationMatrix TranslationMatrix::delta(std::size_t n, Gen i) {
  require_generator(i, n);
  TranslationMatrix a(n);
  a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = -1;
  return a;
}

LatticeVector TranslationMatrix::row(Gen i) const {
  require_generator(i, size());
  return LatticeVector(m_.row(static_cast<std::size_t>(i - 1)));
}

bool TranslationMatrix::has_zero_diagonal() const {
  for (std::size_t k = 0; k < size(); ++k)
    if (m_(k, k) != 0) return false;
  return true;
}

TranslationMatrix star(const TranslationMatrix& a, const TranslationMatrix& b) {
  require_same_rank(a.size(), b.size());
  const std::size_t n = a.size();
  TranslationMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer factor = 1 + 2 * a(j, j);
    for (std::size_t i = 0; i < n; ++i) c(i, j) = a(i, j) + factor * b(i, j);
  }
  return c;
}

bool is_unit(const TranslationMatrix& a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a(k, k) != 0 && a(k, k) != -1) return false;
  return true;
}

TranslationMatrix unit_inverse(const TranslationMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k)
    if (a(k, k) != 0 && a(k, k) != -1)
      throw NonUnitError("not a unit: diagonal entry (" + std::to_string(k + 1) +
                         "," + std::to_string(k + 1) + ") = " + a(k, k).get_str() +
                         " is not in {0,-1}");
  TranslationMatrix b(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool flip = a(j, j) == 0;
    for (std::size_t i = 0; i < n; ++i) b(i, j) = flip ? Integer(-a(i, j)) : a(i, j);
  }
  // The diagonal is preserved: 0 stays 0 and -1 is self-inverse.
  for (std::size_t k = 0; k < n; ++k) b(k, k) = a(k, k);
  return b;
}

Decomposition decompose(const TranslationMatrix& a) {
  const std::size_t n = a.size();
  Decomposition d{a, TranslationMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    d.diagonal(k, k) = a(k, k);
    d.zero_diagonal(k, k) = 0;
  }
  return d;
}

TranslationMatrix delta_conjugate(Gen k, const TranslationMatrix& a0) {
  require_generator(k, a0.size());
  if (!a0.has_zero_diagonal())
    throw std::invalid_argument("delta_conjugate expects a zero-diagonal matrix");
  TranslationMatrix out = a0;
  const std::size_t c = static_cast<std::size_t>(k - 1);
  for (std::size_t r = 0; r < out.size(); ++r) out(r, c) = -out(r, c);
  return out;
}

GEndomorphism to_endomorphism(const TranslationMatrix& a) {
  const std::size_t n = a.size();
  std::vector<GroupElement> img;
  img.reserve(n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    img.emplace_back(ReducedWord::letter(n, i), a.row(i));
  return GEndomorphism(std::move(img));
}

TranslationMatrix iota(const LatticeVector& z) {
  const std::size_t n = z.rank();
  TranslationMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) = -2 * z[j];
  return a;
}

std::string to_string(const TranslationMatrix& a) { return to_string(a.matrix()); }

}  // namespace chw
