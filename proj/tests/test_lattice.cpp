#include <chw/lattice.hpp>

#include <doctest.h>

#include "support.hpp"

#include <functional>

using namespace chw;

namespace {

Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, out = 0; k < n; ++k)
        if (k != c) minor(r - 1, out++) = m(r, k);
    const Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
std::vector<Integer> determinantal_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, rs, cur);
    subsets(m.cols(), k, cs, cur);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(r[a], c[b]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_det(sub).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("rho and act") {
  CHECK(rho(1, 2) == IntMatrix{{1, 0}, {0, -1}});
  CHECK(rho(2, 3) == IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK(rho(2, 3) * rho(2, 3) == IntMatrix::identity(3));
  CHECK(act(ReducedWord(3), LatticeVector{1, 2, 3}) == LatticeVector{1, 2, 3});
  CHECK(act(ReducedWord(3, {1}), LatticeVector{1, 2, 3}) == LatticeVector{1, -2, -3});
  CHECK(act(ReducedWord(3, {1, 2}), LatticeVector{1, 1, 1}) == LatticeVector{-1, -1, 1});
}

TEST_CASE("fixed_sublattice") {
  std::vector<ReducedWord> all{ReducedWord(3, {1}), ReducedWord(3, {2}), ReducedWord(3, {3})};
  CHECK(fixed_sublattice(all).empty());
  std::vector<ReducedWord> one{ReducedWord(3, {1})};
  CHECK(fixed_sublattice(one) == std::vector<LatticeVector>{LatticeVector{1, 0, 0}});
  std::vector<ReducedWord> trivial{ReducedWord(3)};
  CHECK(fixed_sublattice(trivial).size() == 3);
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<ReducedWord> gens;
    for (Gen i = 1; i <= static_cast<Gen>(n); ++i) gens.push_back(ReducedWord::letter(n, i));
    CHECK(fixed_sublattice(gens).empty());
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}).factors == std::vector<Integer>{2, 2});
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).factors == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(IntMatrix(3, 2)).factors.empty());
  const auto r = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(r.factors == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("cokernel_invariants") {
  CHECK(cokernel_invariants(IntMatrix::identity(2)) == CokernelInvariants{0, {}});
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 0}}) == CokernelInvariants{1, {2}});
  CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 6}, {0, 0}}) == CokernelInvariants{1, {6}});
}

TEST_CASE("commutant_is_diagonal") {
  CHECK(commutant_is_diagonal(2));
  CHECK(commutant_is_diagonal(3));
  CHECK(commutant_is_diagonal(5));
}

TEST_CASE("kernel_basis") {
  const auto k = kernel_basis(IntMatrix{{1, 1, 0}, {0, 0, 1}});
  REQUIRE(k.size() == 1);
  CHECK(IntMatrix{{1, 1, 0}, {0, 0, 1}} * k[0] == LatticeVector{0, 0});
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("property: act is a left action") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 5));
    const auto a = testing::random_word(n, rng);
    const auto b = testing::random_word(n, rng);
    const auto z = testing::random_vector(n, rng);
    CHECK(act(a * b, z) == act(a, act(b, z)));
  }
}

TEST_CASE("property: SNF round trip and determinantal divisors") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const IntMatrix m = testing::random_int_matrix(rows, cols, rng, 5);
    const SNFResult r = smith_normal_form(m);
    CHECK(r.U * m * r.V == r.D);
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
    CHECK(r.V * r.V_inverse == IntMatrix::identity(cols));
    CHECK(r.D.is_diagonal());
    for (std::size_t k = 0; k < r.factors.size(); ++k) {
      CHECK(r.factors[k] > 0);
      CHECK(r.D(k, k) == r.factors[k]);
      if (k > 0) CHECK(r.factors[k] % r.factors[k - 1] == 0);
    }
    CHECK(r.factors == determinantal_factors(m));
  }
}

TEST_CASE("property: determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const IntMatrix m = testing::random_int_matrix(n, n, rng, 5);
    CHECK(determinant(m) == cofactor_det(m));
  }
}
