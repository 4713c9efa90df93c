#pragma once

// Normal-form arithmetic in G_n through the extension 1 -> A -> G -> W -> 1.
//
// Every element is written uniquely as x_{i_1} ... x_{i_k} * a with the
// letters forming a reduced word of W and a in A stored as exponents of
// (x_1^2, ..., x_n^2). The A-part always sits on the right.

#include <chw/integer.hpp>
#include <chw/lattice.hpp>
#include <chw/word_algebra.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace chw {

class GroupElement {
 public:
  explicit GroupElement(std::size_t rank = 0) : word_(rank), shift_(rank) {}
  GroupElement(ReducedWord word, LatticeVector shift);

  static GroupElement identity(std::size_t rank) { return GroupElement(rank); }
  /// x_i
  static GroupElement generator(std::size_t rank, Gen i);

  std::size_t rank() const { return word_.rank(); }
  const ReducedWord& word() const { return word_; }
  const LatticeVector& shift() const { return shift_; }

  bool is_identity() const { return word_.empty() && shift_.is_zero(); }
  bool in_a() const { return word_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  ReducedWord word_;
  LatticeVector shift_;
};

/// g * x_i^sign
GroupElement append_letter(const GroupElement& g, Gen i, int sign);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
/// by * g * by^{-1}
GroupElement conjugate(const GroupElement& g, const GroupElement& by);
GroupElement power(const GroupElement& g, const Integer& k);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return multiply(g, h);
}

/// The A-part of (x_i a)^2, which equals (x_i^2)^(2 a_i + 1).
LatticeVector square_shifted(Gen i, const LatticeVector& a);

ReducedWord project_w(const GroupElement& g);
GroupElement embed_a(const LatticeVector& z);

/// Number of normal forms with |word| <= max_len and |shift_k| <= box.
Integer ball_size(std::size_t n, std::size_t max_len, std::size_t box);

inline constexpr std::uint64_t kDefaultBallCap = 20'000'000;

/// Visits the normal-form box in canonical order: word length, then letters
/// lexicographically, then shift lexicographically. The visitor returns
/// false to stop early. Throws ResourceLimit when the box exceeds `cap`.
void enumerate_ball(std::size_t n, std::size_t max_len, std::size_t box,
                    const std::function<bool(const GroupElement&)>& visit,
                    std::uint64_t cap = kDefaultBallCap);

/// Canonical text form `x1 x2 ; [z1,...,zn]`.
std::string to_string(const GroupElement& g);

}  // namespace chw
