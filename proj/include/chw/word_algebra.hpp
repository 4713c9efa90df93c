#pragma once

// Arithmetic in W_n = C_2 * ... * C_2 and in its automorphism group.

#include <chw/integer.hpp>

#include <span>
#include <string>
#include <vector>

namespace chw {

/// Reduced word over involutive generators 1..rank: no letter repeats
/// immediately. The empty word is the identity; the inverse is the reversal.
class ReducedWord {
 public:
  explicit ReducedWord(std::size_t rank = 0) : rank_(rank) {}

  /// Validates that `letters` is already reduced.
  ReducedWord(std::size_t rank, std::vector<Gen> letters);

  /// Freely reduces an arbitrary letter sequence.
  static ReducedWord reduce(std::size_t rank, std::span<const Gen> letters);

  static ReducedWord letter(std::size_t rank, Gen i) {
    return ReducedWord(rank, std::vector<Gen>{i});
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Gen>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ReducedWord inverse() const;

  /// Right-multiplies by a single generator, cancelling if it matches.
  void push(Gen i);

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::size_t rank_;
  std::vector<Gen> letters_;
};

ReducedWord w_multiply(const ReducedWord& lhs, const ReducedWord& rhs);

inline ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs) {
  return w_multiply(lhs, rhs);
}

/// Diagonal of rho(w): coordinate j is (-1)^(number of letters different
/// from j).
std::vector<int> sign_vector(const ReducedWord& w);

/// Permutation of 1..n stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Gen> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, Gen i, Gen j);
  /// The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation long_cycle(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Gen operator()(Gen i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Gen>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Gen> images_;
};

/// (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

/// All n! permutations in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(std::size_t n);

/// Adjacent transpositions plus the long cycle.
std::vector<Permutation> permutation_generators(std::size_t n);

/// Automorphism of W given by the images of the generators.
class WAutomorphism {
 public:
  explicit WAutomorphism(std::vector<ReducedWord> images);

  static WAutomorphism identity(std::size_t n);

  std::size_t rank() const { return images_.size(); }
  const std::vector<ReducedWord>& images() const { return images_; }
  const ReducedWord& image(Gen i) const {
    return images_[static_cast<std::size_t>(i - 1)];
  }

  bool is_identity() const;

  friend bool operator==(const WAutomorphism&, const WAutomorphism&) = default;

 private:
  std::vector<ReducedWord> images_;
};

WAutomorphism w_perm_auto(const Permutation& sigma);

/// x_i -> x_j x_i x_j, every other generator fixed.
WAutomorphism w_fr_auto(std::size_t n, Gen i, Gen j);

ReducedWord w_apply(const WAutomorphism& f, const ReducedWord& w);

/// (f o g)(x) = f(g(x)).
WAutomorphism w_compose(const WAutomorphism& f, const WAutomorphism& g);

inline bool w_equal(const WAutomorphism& f, const WAutomorphism& g) {
  return f == g;
}

std::string to_string(const ReducedWord& w);
std::string to_string(const Permutation& sigma);

}  // namespace chw
