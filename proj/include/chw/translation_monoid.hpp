#pragma once

// The monoid (M, *) of translation endomorphisms t_a : x_i -> x_i a_i, where
// row i of a holds the exponents of a_i in the basis (x_1^2, ..., x_n^2).

#include <chw/endomorphism.hpp>
#include <chw/lattice.hpp>

#include <utility>

namespace chw {

class TranslationMatrix {
 public:
  explicit TranslationMatrix(std::size_t n = 0) : m_(n, n) {}
  explicit TranslationMatrix(IntMatrix m);
  TranslationMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : TranslationMatrix(IntMatrix(rows)) {}

  /// epsilon_ij: 1 at (i, j), i != j.
  static TranslationMatrix epsilon(std::size_t n, Gen i, Gen j);
  /// delta_i: -1 at (i, i).
  static TranslationMatrix delta(std::size_t n, Gen i);

  std::size_t size() const { return m_.rows(); }
  const Integer& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  Integer& operator()(std::size_t r, std::size_t c) { return m_(r, c); }
  const IntMatrix& matrix() const { return m_; }

  /// Exponent vector of a_i (row i, 1-based).
  LatticeVector row(Gen i) const;

  bool has_zero_diagonal() const;
  bool is_diagonal() const { return m_.is_diagonal(); }

  friend bool operator==(const TranslationMatrix&, const TranslationMatrix&) = default;
  friend TranslationMatrix operator+(const TranslationMatrix& a, const TranslationMatrix& b) {
    return TranslationMatrix(a.m_ + b.m_);
  }
  friend TranslationMatrix operator*(const Integer& k, const TranslationMatrix& a) {
    return TranslationMatrix(k * a.m_);
  }

 private:
  IntMatrix m_;
};

/// c_ij = a_ij + (1 + 2 a_jj) b_ij, so that t_a o t_b = t_{a*b}.
TranslationMatrix star(const TranslationMatrix& a, const TranslationMatrix& b);

/// Units are exactly the matrices with every diagonal entry in {0, -1}.
bool is_unit(const TranslationMatrix& a);

/// Two-sided star-inverse. Throws NonUnitError naming the bad diagonal entry.
TranslationMatrix unit_inverse(const TranslationMatrix& a);

struct Decomposition {
  TranslationMatrix zero_diagonal;
  TranslationMatrix diagonal;
};

/// a = a_0 * a_d with a_0 zero-diagonal and a_d diagonal.
Decomposition decompose(const TranslationMatrix& a);

/// delta_k * a0 * delta_k for zero-diagonal a0: negates column k.
TranslationMatrix delta_conjugate(Gen k, const TranslationMatrix& a0);

/// t_a as an endomorphism of G.
GEndomorphism to_endomorphism(const TranslationMatrix& a);

/// The translation matrix whose t is conjugation by embed_a(z):
/// entry (i, j) is -2 z_j off the diagonal and 0 on it.
TranslationMatrix iota(const LatticeVector& z);

std::string to_string(const TranslationMatrix& a);

}  // namespace chw
