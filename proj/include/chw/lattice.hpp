#pragma once

// The W-module A = Z^n with the diagonal action rho, and exact integer
// linear algebra over it.

#include <chw/integer.hpp>
#include <chw/word_algebra.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chw {

/// Coordinates of an element of A in the basis (x_1^2, ..., x_n^2).
class LatticeVector {
 public:
  explicit LatticeVector(std::size_t rank = 0) : coords_(rank) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  /// Standard basis vector e_i, i in 1..rank.
  static LatticeVector unit(std::size_t rank, Gen i);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t k) const { return coords_[k]; }
  Integer& operator[](std::size_t k) { return coords_[k]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& rhs);
  LatticeVector& operator-=(const LatticeVector& rhs);

  friend LatticeVector operator+(LatticeVector lhs, const LatticeVector& rhs) {
    return lhs += rhs;
  }
  friend LatticeVector operator-(LatticeVector lhs, const LatticeVector& rhs) {
    return lhs -= rhs;
  }
  friend LatticeVector operator-(LatticeVector v) {
    for (auto& c : v.coords_) c = -c;
    return v;
  }
  friend LatticeVector operator*(const Integer& k, LatticeVector v) {
    for (auto& c : v.coords_) c *= k;
    return v;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols_if_empty = 0);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_diagonal() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const Integer& k, IntMatrix m) {
    for (auto& x : m.data_) x *= k;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

inline bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

/// U * A * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ..., d_k >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Inverse of V, maintained alongside V.
  IntMatrix V_inverse;
  /// Nonzero diagonal entries of D, in divisibility order.
  std::vector<Integer> factors;

  std::size_t rank() const { return factors.size(); }
};

/// Pivot: smallest nonzero absolute value, ties broken in row-major order.
SNFResult smith_normal_form(const IntMatrix& m);

/// Z-basis of {v : m v = 0}, canonicalised to row echelon form.
std::vector<LatticeVector> kernel_basis(const IntMatrix& m);

/// Echelon form of the lattice spanned by `vectors`; pivots positive and
/// entries above each pivot reduced into [0, pivot).
std::vector<LatticeVector> hermite_basis(std::vector<LatticeVector> vectors);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Decomposition of Z^rows / image(m).
CokernelInvariants cokernel_invariants(const IntMatrix& m);

/// rho(x_i): +1 at position i, -1 elsewhere.
IntMatrix rho(Gen i, std::size_t n);

/// rho of an arbitrary element of W.
IntMatrix rho(const ReducedWord& w);

/// w . z = w z w^{-1} in coordinates.
LatticeVector act(const ReducedWord& w, const LatticeVector& z);

/// Basis of the sublattice fixed by every generator in the list.
std::vector<LatticeVector> fixed_sublattice(std::span<const ReducedWord> generators);

/// True iff every integer matrix commuting with all rho(i) is diagonal.
bool commutant_is_diagonal(std::size_t n);

std::string to_string(const LatticeVector& v);
std::string to_string(const IntMatrix& m);

}  // namespace chw
