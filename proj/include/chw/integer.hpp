#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chw {

/// Arbitrary-precision integer used for every exponent and matrix entry.
using Integer = mpz_class;

/// Generator label, 1-based as in x_1, ..., x_n.
using Gen = int;

class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("rank mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require_same_rank(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw RankMismatch(lhs, rhs);
}

inline void require_generator(Gen i, std::size_t rank) {
  if (i < 1 || static_cast<std::size_t>(i) > rank)
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside 1.." + std::to_string(rank));
}

}  // namespace chw
