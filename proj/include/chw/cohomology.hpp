#pragma once

// H^2(W, A) in the coordinate model (Z/2)^n given by restriction to the
// subgroups <x_i>, and H^1(W, A) as the cokernel of iota : A -> M_0.

#include <chw/lattice.hpp>

#include <vector>

namespace chw {

/// Element of H^2(W, A) = (Z/2)^n; bit i is the restriction to <x_i>.
struct CohClass {
  std::vector<int> bits;

  std::size_t rank() const { return bits.size(); }
  friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// Torsion invariants of ker(sigma - I) / im(sigma + I) for an involution
/// sigma, i.e. H^2 of the cyclic group it generates.
std::vector<Integer> h2_cyclic(const IntMatrix& sigma);

/// h2_cyclic(rho(i)) for i = 1..n.
std::vector<std::vector<Integer>> h2_w(std::size_t n);

/// The extension has torsion iff some restriction to a finite subgroup
/// vanishes; the <x_i> represent the conjugacy classes of those.
bool is_torsion_free_class(const CohClass& c);

/// All 2^n classes, in binary counting order, filtered by the criterion.
std::vector<CohClass> torsion_free_classes(std::size_t n);

/// Class of G_n: coordinate i is x_i^2 in A^{<x_i>} / (1 + rho(i)) A.
CohClass extension_class(std::size_t n);

/// The n(n-1) x n matrix whose column k is iota(e_k) restricted to the
/// off-diagonal positions (row-major).
IntMatrix iota_image_matrix(std::size_t n);

/// Cokernel of iota_image_matrix(n). Requires n >= 3.
CokernelInvariants h1_w(std::size_t n);

/// Text such as "Z^8 x (Z/2)^4"; the trivial group prints as "0".
std::string format_abelian(const CokernelInvariants& inv);

}  // namespace chw
