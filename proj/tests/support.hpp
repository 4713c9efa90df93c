#pragma once

// Random inputs for the property tests. Ranges: word length <= 6, shift
// coordinates in [-3,3], matrix entries in [-4,4].

#include <chw/group_core.hpp>
#include <chw/translation_monoid.hpp>

#include <random>
#include <vector>

namespace testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::vector<chw::Gen> random_letters(std::size_t n, std::size_t max_len,
                                            std::mt19937_64& rng) {
  std::vector<chw::Gen> out(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len))));
  for (auto& g : out) g = static_cast<chw::Gen>(uniform(rng, 1, static_cast<long>(n)));
  return out;
}

inline chw::ReducedWord random_word(std::size_t n, std::mt19937_64& rng, std::size_t max_len = 6) {
  return chw::ReducedWord::reduce(n, random_letters(n, max_len, rng));
}

inline chw::LatticeVector random_vector(std::size_t n, std::mt19937_64& rng, long bound = 3) {
  chw::LatticeVector z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = uniform(rng, -bound, bound);
  return z;
}

inline chw::GroupElement random_element(std::size_t n, std::mt19937_64& rng) {
  auto w = random_word(n, rng);
  return chw::GroupElement(std::move(w), random_vector(n, rng));
}

inline chw::TranslationMatrix random_matrix(std::size_t n, std::mt19937_64& rng,
                                            long lo = -4, long hi = 4) {
  chw::TranslationMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = uniform(rng, lo, hi);
  return a;
}

inline chw::TranslationMatrix random_unit(std::size_t n, std::mt19937_64& rng) {
  auto a = random_matrix(n, rng);
  for (std::size_t k = 0; k < n; ++k) a(k, k) = uniform(rng, -1, 0);
  return a;
}

inline chw::IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                        long bound) {
  chw::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

}  // namespace testing
