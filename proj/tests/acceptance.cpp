// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chw/automorphisms.hpp>
#include <chw/cli.hpp>
#include <chw/cohomology.hpp>
#include <chw/verification.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace chw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Gen as_gen(std::size_t n) { return static_cast<Gen>(n); }

LatticeVector random_vector(std::size_t n, std::mt19937_64& rng, long bound) {
  LatticeVector z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = uniform(rng, -bound, bound);
  return z;
}

TranslationMatrix random_matrix(std::size_t n, std::mt19937_64& rng, long lo, long hi) {
  TranslationMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = uniform(rng, lo, hi);
  return a;
}

GroupElement random_element(std::size_t n, std::mt19937_64& rng) {
  std::vector<Gen> letters(static_cast<std::size_t>(uniform(rng, 0, 6)));
  for (auto& g : letters) g = static_cast<Gen>(uniform(rng, 1, static_cast<long>(n)));
  return GroupElement(ReducedWord::reduce(n, letters), random_vector(n, rng, 3));
}

Outcome relators() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n)
    for (Gen i = 1; i <= as_gen(n); ++i)
      for (Gen j = 1; j <= as_gen(n); ++j) {
        if (i == j) continue;
        const auto xi = GroupElement::generator(n, i);
        const auto xj = GroupElement::generator(n, j);
        o.require((invert(xi) * xj * xj * xi * xj * xj).is_identity(),
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  return o;
}

Outcome square_of_shifted_generator() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 200; ++t) {
      const Gen i = static_cast<Gen>(uniform(rng, 1, static_cast<long>(n)));
      const LatticeVector a = random_vector(n, rng, 5);
      const GroupElement g(ReducedWord(n, {i}), a);
      const Integer e = 2 * a[static_cast<std::size_t>(i - 1)] + 1;
      o.require(power(g, 2) == power(embed_a(LatticeVector::unit(n, i)), e), to_string(g));
    }
  return o;
}

Outcome monoid_homomorphism() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 200; ++t) {
      const auto a = random_matrix(n, rng, -4, 4);
      const auto b = random_matrix(n, rng, -4, 4);
      const auto lhs = to_endomorphism(star(a, b));
      const auto rhs = compose(to_endomorphism(a), to_endomorphism(b));
      o.require(lhs.images() == rhs.images(), to_string(a) + " * " + to_string(b));
    }
  return o;
}

Outcome unit_characterization() {
  Outcome o;
  const std::size_t n = 2;
  const TranslationMatrix zero(n);
  std::size_t units = 0;
  for (long code = 0; code < 256; ++code) {
    TranslationMatrix a(n);
    long c = code;
    for (std::size_t k = 0; k < 4; ++k, c /= 4) a(k / 2, k % 2) = c % 4 - 2;
    const bool diag_ok = (a(0, 0) == 0 || a(0, 0) == -1) && (a(1, 1) == 0 || a(1, 1) == -1);
    // The diagonal of star(a, b) = 0 forces (1 + 2 a_jj) b_jj = -a_jj.
    bool solvable = true;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer d = 1 + 2 * a(j, j);
      solvable = solvable && d != 0 && a(j, j) % d == 0;
    }
    // Independent search for a two-sided inverse in a box.
    bool found = false;
    for (long code_b = 0; code_b < 9 * 9 * 9 * 9 && !found; ++code_b) {
      TranslationMatrix b(n);
      long cb = code_b;
      for (std::size_t k = 0; k < 4; ++k, cb /= 9) b(k / 2, k % 2) = cb % 9 - 4;
      found = star(a, b) == zero && star(b, a) == zero;
    }
    o.require(is_unit(a) == diag_ok, "is_unit " + to_string(a));
    o.require(solvable == diag_ok, "diagonal equation " + to_string(a));
    o.require(found == diag_ok, "box search " + to_string(a));
    if (diag_ok) {
      ++units;
      const auto b = unit_inverse(a);
      o.require(star(a, b) == zero && star(b, a) == zero, "inverse formula " + to_string(a));
    }
  }
  o.require(units == 64, "unit count " + std::to_string(units));
  return o;
}

Outcome fr_square() {
  Outcome o;
  for (std::size_t n = 3; n <= 5; ++n)
    for (Gen i = 1; i <= as_gen(n); ++i)
      for (Gen j = 1; j <= as_gen(n); ++j) {
        if (i == j) continue;
        const auto a = named(fr_token(i, j), n);
        const auto t = to_endomorphism(Integer(-2) * TranslationMatrix::epsilon(n, i, j));
        o.require(compose(a, a) == t, "n=" + std::to_string(n) + " a[" + std::to_string(i) +
                                          "," + std::to_string(j) + "]");
      }
  return o;
}

Outcome run_suite_clean(const std::string& suite, std::size_t lo, std::size_t hi) {
  Outcome o;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto r = run_suite(suite, n, 0);
    std::string first;
    for (const auto& c : r.checks)
      if (!c.pass) {
        first = c.instance;
        break;
      }
    o.require(r.ok(), suite + " n=" + std::to_string(n) + ": " + std::to_string(r.failed()) +
                          " failed, first " + first);
  }
  return o;
}

Outcome inner_products() {
  Outcome o = run_suite_clean("outg", 3, 5);
  for (std::size_t n = 3; n <= 5; ++n)
    for (Gen j = 1; j <= as_gen(n); ++j) {
      GEndomorphism eps = GEndomorphism::identity(n);
      GEndomorphism fr = GEndomorphism::identity(n);
      for (Gen i = 1; i <= as_gen(n); ++i) {
        if (i == j) continue;
        eps = compose(eps, named(eps_token(i, j, 2), n));
        fr = compose(fr, named(fr_token(i, j), n));
      }
      const auto xj = GroupElement::generator(n, j);
      const auto xj_inv_sq = invert(xj * xj);
      const std::string at = "n=" + std::to_string(n) + " j=" + std::to_string(j);
      o.require(eps == inner(xj_inv_sq), "eps column " + at);
      o.require(fr == inner(xj), "alpha column " + at);
      o.require(inner_witness(eps, 1, 2) == xj_inv_sq, "eps witness " + at);
      o.require(inner_witness(fr, 1, 2) == xj, "alpha witness " + at);
    }
  return o;
}

Outcome module_structure() {
  Outcome o;
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<ReducedWord> gens;
    for (Gen i = 1; i <= as_gen(n); ++i) gens.push_back(ReducedWord(n, {i}));
    o.require(fixed_sublattice(gens).empty(), "A^W nonzero for n=" + std::to_string(n));
    o.require(commutant_is_diagonal(n), "commutant not diagonal for n=" + std::to_string(n));
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      IntMatrix d = IntMatrix::identity(n);
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1) d(k, k) = -1;
      bool commutes = true;
      for (Gen i = 1; i <= as_gen(n); ++i) commutes = commutes && d * rho(i, n) == rho(i, n) * d;
      if (commutes && is_semilinear(d, WAutomorphism::identity(n))) ++count;
    }
    o.require(count == (std::size_t{1} << n), "sign diagonals for n=" + std::to_string(n));
  }
  // Brute-force commutant over entries in {-1,0,1} for n = 3.
  const std::size_t n = 3;
  std::size_t found = 0;
  for (long code = 0; code < 19683; ++code) {
    IntMatrix m(n, n);
    long c = code;
    for (std::size_t k = 0; k < 9; ++k, c /= 3) m(k / 3, k % 3) = c % 3 - 1;
    if (!is_unimodular(m)) continue;
    bool commutes = true;
    for (Gen i = 1; i <= 3; ++i) commutes = commutes && m * rho(i, n) == rho(i, n) * m;
    if (commutes) ++found;
  }
  o.require(found == 8, "brute-force commutant count " + std::to_string(found));
  return o;
}

Outcome second_cohomology() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto h2 = h2_w(n);
    o.require(h2 == std::vector<std::vector<Integer>>(n, {2}), "h2 n=" + std::to_string(n));
    std::size_t torsion_free = 0;
    CohClass last;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      CohClass c{std::vector<int>(n)};
      for (std::size_t k = 0; k < n; ++k) c.bits[k] = static_cast<int>(mask >> k & 1);
      if (is_torsion_free_class(c)) {
        ++torsion_free;
        last = c;
      }
    }
    o.require(torsion_free == 1, "torsion-free count n=" + std::to_string(n));
    o.require(extension_class(n) == last, "extension class n=" + std::to_string(n));
    o.require(torsion_free_classes(n) == std::vector<CohClass>{last},
              "torsion_free_classes n=" + std::to_string(n));
  }
  return o;
}

Outcome first_cohomology() {
  Outcome o;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto inv = cokernel_invariants(iota_image_matrix(n));
    const CokernelInvariants expected{n * (n - 2), std::vector<Integer>(n, 2)};
    o.require(inv == expected, "SNF of iota image n=" + std::to_string(n));
    o.require(h1_w(n) == expected, "h1_w n=" + std::to_string(n));
  }
  return o;
}

Outcome translation_kernel() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (std::size_t n = 3; n <= 5; ++n)
    for (int t = 0; t < 100; ++t) {
      auto a = random_matrix(n, rng, -4, 4);
      const bool zero_diag = uniform(rng, 0, 1) == 0;
      for (std::size_t k = 0; k < n; ++k) a(k, k) = zero_diag ? 0 : uniform(rng, -1, 0);
      o.require((induced_matrix(to_endomorphism(a)) == IntMatrix::identity(n)) ==
                    a.has_zero_diagonal(),
                to_string(a));
    }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_element(n, rng);
      const auto b = random_element(n, rng);
      const auto c = random_element(n, rng);
      o.require((a * b) * c == a * (b * c), "associativity n=" + std::to_string(n));
      o.require((a * invert(a)).is_identity() && (invert(a) * a).is_identity(),
                "inverse n=" + std::to_string(n));
    }
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -9, 9);
    const auto s = smith_normal_form(m);
    bool shape = true;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (r != c && s.D(r, c) != 0) shape = false;
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      shape = shape && s.factors[k] > 0 && s.D(k, k) == s.factors[k];
      if (k > 0) shape = shape && s.factors[k] % s.factors[k - 1] == 0;
    }
    o.require(s.U * m * s.V == s.D && is_unimodular(s.U) && is_unimodular(s.V) && shape,
              "SNF " + to_string(m));
  }
  const std::size_t n = 3;
  std::size_t torsion = 0;
  std::size_t central = 0;
  enumerate_ball(n, 3, 1, [&](const GroupElement& g) {
    if (g.is_identity()) return true;
    GroupElement p = g;
    for (int k = 2; k <= 12; ++k) {
      p = p * g;
      if (p.is_identity()) ++torsion;
    }
    bool commutes = true;
    for (Gen i = 1; i <= 3; ++i) {
      const auto x = GroupElement::generator(n, i);
      commutes = commutes && g * x == x * g;
    }
    if (commutes) ++central;
    return true;
  });
  o.require(torsion == 0, "torsion in ball(3,1)");
  o.require(central == 0, "central element in ball(3,1)");
  return o;
}

Outcome negative_controls() {
  Outcome o;
  for (const auto& r : run_all(3, 0)) {
    std::size_t controls = 0;
    for (const auto& c : r.checks)
      if (c.name.rfind("control_", 0) == 0) {
        ++controls;
        o.require(c.pass, r.suite + " " + c.instance + " held unmutated");
      }
    o.require(controls > 0, r.suite + " has no control");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args{"verify", "--n", "3", "--suite", "all", "--seed", "0", "--json"};
  std::ostringstream out1, out2, err;
  const int c1 = cli::dispatch(args, out1, err);
  const int c2 = cli::dispatch(args, out2, err);
  o.require(c1 == cli::kExitOk && c2 == cli::kExitOk, "verify exit code");
  o.require(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "defining relators, n=2..6", 1.0, relators},
      {2, "power(x_i a, 2) = (x_i^2)^(2a_i+1), n=2..5", 1.0, square_of_shifted_generator},
      {3, "t_{a*b} = t_a o t_b, n=2..5", 5.0, monoid_homomorphism},
      {4, "units of the n=2 monoid, entries in [-2,1]", 5.0, unit_characterization},
      {5, "(alpha_i^j)^2 = t_{-2 eps_ij}, n=3..5", 1.0, fr_square},
      {6, "Aut(G_n) relation suite, n=3,4", 60.0, [] { return run_suite_clean("autg", 3, 4); }},
      {7, "inner column products with witnesses, n=3..5", 30.0, inner_products},
      {8, "A^W = 0 and Aut_W(A) = sign diagonals, n=3..5", 5.0, module_structure},
      {9, "H^2 and the extension class, n=2..6", 1.0, second_cohomology},
      {10, "H^1 = Z^{n(n-2)} x (Z/2)^n, n=3..6", 5.0, first_cohomology},
      {11, "t_a acts trivially on A iff diag(a) = 0, n=3..5", 5.0, translation_kernel},
      {12, "group axioms, SNF round trip, torsion and center", 60.0, property_suites},
      {13, "negative controls fail as intended", 60.0, negative_controls},
      {14, "verify --json is byte-identical across runs", 60.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail = "time limit exceeded";
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s (%.3fs, limit %.0fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, c.limit_seconds, o.pass ? "" : ": ", o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
