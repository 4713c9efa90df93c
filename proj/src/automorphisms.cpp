#include <chw/automorphisms.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chw {

AutoToken perm_token(Permutation sigma, bool inverse) {
  return {PermToken{std::move(sigma)}, inverse};
}
AutoToken fr_token(Gen i, Gen j, bool inverse) { return {FrToken{i, j}, inverse}; }
AutoToken eps_token(Gen i, Gen j, Integer exponent, bool inverse) {
  return {EpsToken{i, j, std::move(exponent)}, inverse};
}
AutoToken delta_token(Gen i, bool inverse) { return {DeltaToken{i}, inverse}; }
AutoToken trans_token(TranslationMatrix a, bool inverse) {
  return {TransToken{std::move(a)}, inverse};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_distinct(Gen i, Gen j, const char* what) {
  if (i == j)
    throw std::invalid_argument(std::string(what) + "[" + std::to_string(i) + "," +
                                std::to_string(j) + "] needs distinct indices");
}

GEndomorphism fr_lift(std::size_t n, Gen i, Gen j) {
  auto img = GEndomorphism::identity(n).images();
  const GroupElement xj = GroupElement::generator(n, j);
  img[static_cast<std::size_t>(i - 1)] = conjugate(GroupElement::generator(n, i), xj);
  return GEndomorphism(std::move(img));
}

}  // namespace

void validate(const AutoToken& token, std::size_t n) {
  std::visit(overloaded{
                 [&](const PermToken& t) { require_same_rank(t.sigma.size(), n); },
                 [&](const FrToken& t) {
                   require_generator(t.i, n);
                   require_generator(t.j, n);
                   require_distinct(t.i, t.j, "a");
                 },
                 [&](const EpsToken& t) {
                   require_generator(t.i, n);
                   require_generator(t.j, n);
                   require_distinct(t.i, t.j, "e");
                 },
                 [&](const DeltaToken& t) { require_generator(t.i, n); },
                 [&](const TransToken& t) { require_same_rank(t.a.size(), n); },
             },
             token.op);
}

GEndomorphism named(const AutoToken& token, std::size_t n) {
  validate(token, n);
  return std::visit(
      overloaded{
          [&](const PermToken& t) {
            const Permutation s = token.inverse ? t.sigma.inverse() : t.sigma;
            std::vector<GroupElement> img;
            for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
              img.push_back(GroupElement::generator(n, s(i)));
            return GEndomorphism(std::move(img));
          },
          [&](const FrToken& t) {
            GEndomorphism lift = fr_lift(n, t.i, t.j);
            if (!token.inverse) return lift;
            // (alpha_i^j)^2 = t_{-2 eps_ij}, so the inverse is alpha_i^j t_{2 eps_ij}.
            return compose(lift, to_endomorphism(Integer(2) *
                                                 TranslationMatrix::epsilon(n, t.i, t.j)));
          },
          [&](const EpsToken& t) {
            const Integer k = token.inverse ? Integer(-t.exponent) : t.exponent;
            return to_endomorphism(k * TranslationMatrix::epsilon(n, t.i, t.j));
          },
          [&](const DeltaToken& t) {
            return to_endomorphism(TranslationMatrix::delta(n, t.i));
          },
          [&](const TransToken& t) {
            TranslationMatrix inv = unit_inverse(t.a);  // rejects non-units
            return to_endomorphism(token.inverse ? inv : t.a);
          },
      },
      token.op);
}

GEndomorphism evaluate(const AutoWord& word) {
  GEndomorphism result = GEndomorphism::identity(word.rank);
  for (const auto& token : word.tokens) result = compose(result, named(token, word.rank));
  return result;
}

AutoWord invert_word(const AutoWord& word) {
  AutoWord out{word.rank, {}};
  out.tokens.reserve(word.tokens.size());
  for (auto it = word.tokens.rbegin(); it != word.tokens.rend(); ++it) {
    const AutoToken& tok = *it;
    out.tokens.push_back(std::visit(
        overloaded{
            [&](const PermToken& t) {
              return perm_token(tok.inverse ? t.sigma : t.sigma.inverse());
            },
            [&](const FrToken& t) { return fr_token(t.i, t.j, !tok.inverse); },
            [&](const EpsToken& t) {
              return eps_token(t.i, t.j, tok.inverse ? t.exponent : Integer(-t.exponent));
            },
            [&](const DeltaToken& t) { return delta_token(t.i); },
            [&](const TransToken& t) {
              return trans_token(tok.inverse ? t.a : unit_inverse(t.a));
            },
        },
        tok.op));
  }
  return out;
}

std::string to_string(const AutoToken& token) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const PermToken& t) { os << to_string(t.sigma); },
                 [&](const FrToken& t) { os << "a[" << t.i << ',' << t.j << ']'; },
                 [&](const EpsToken& t) {
                   os << "e[" << t.i << ',' << t.j << ']';
                   if (t.exponent != 1) os << '^' << t.exponent;
                 },
                 [&](const DeltaToken& t) { os << "d[" << t.i << ']'; },
                 [&](const TransToken& t) { os << "t" << to_string(t.a); },
             },
             token.op);
  if (token.inverse) os << '\'';
  return os.str();
}

std::string to_string(const AutoWord& word) {
  std::string out;
  for (std::size_t k = 0; k < word.tokens.size(); ++k) {
    if (k) out += ' ';
    out += to_string(word.tokens[k]);
  }
  return out;
}

WAutomorphism induced_w(const GEndomorphism& phi) {
  std::vector<ReducedWord> img;
  img.reserve(phi.rank());
  for (const auto& g : phi.images()) img.push_back(project_w(g));
  return WAutomorphism(std::move(img));
}

IntMatrix induced_matrix(const GEndomorphism& phi) {
  const std::size_t n = phi.rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement& y = phi.images()[i];
    const GroupElement sq = multiply(y, y);
    if (!sq.in_a())
      throw std::domain_error("image of x" + std::to_string(i + 1) +
                              "^2 is not in A: " + to_string(sq));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sq.shift()[j];
  }
  return m;
}

std::optional<TranslationMatrix> translation_part(const GEndomorphism& phi) {
  const std::size_t n = phi.rank();
  TranslationMatrix a(n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i) {
    const GroupElement& y = phi.image(i);
    if (y.word().letters() != std::vector<Gen>{i}) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) a(static_cast<std::size_t>(i - 1), j) = y.shift()[j];
  }
  return a;
}

std::optional<GroupElement> inner_witness(const GEndomorphism& phi,
                                          std::size_t max_len, std::size_t box) {
  const std::size_t n = phi.rank();
  std::optional<GroupElement> found;
  enumerate_ball(n, max_len, box, [&](const GroupElement& g) {
    // Every image of inner(g) has the word g x_i g^{-1}; compare images
    // one at a time so most candidates are rejected cheaply.
    const GroupElement g_inv = invert(g);
    for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
      if (multiply(append_letter(g, i, 1), g_inv) != phi.image(i)) return true;
    found = g;
    return false;
  });
  return found;
}

bool is_semilinear(const IntMatrix& f, const WAutomorphism& F) {
  require_same_rank(f.rows(), F.rank());
  if (!is_unimodular(f))
    throw std::invalid_argument("semi-linear check needs a unimodular matrix");
  const std::size_t n = F.rank();
  for (Gen k = 1; k <= static_cast<Gen>(n); ++k)
    if (f * rho(k, n) != rho(F.image(k)) * f) return false;
  return true;
}

SemiLinearPair induced_pair(const GEndomorphism& phi) {
  return {induced_matrix(phi).transpose(), induced_w(phi)};
}

SemiLinearPair sn_section(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  IntMatrix p(n, n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    p(static_cast<std::size_t>(sigma(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
  return {p, w_perm_auto(sigma)};
}

AutoWord random_autoword(std::size_t n, std::size_t length, std::mt19937_64& rng,
                         long bound) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<Gen> gen(1, static_cast<Gen>(n));
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::uniform_int_distribution<int> coin(0, 1);
  auto distinct_pair = [&] {
    Gen i = gen(rng);
    Gen j = gen(rng);
    while (j == i) j = gen(rng);
    return std::pair{i, j};
  };

  AutoWord w{n, {}};
  for (std::size_t k = 0; k < length; ++k) {
    const bool inv = coin(rng) == 1;
    switch (kind(rng)) {
      case 0: {
        auto img = Permutation::identity(n).images();
        std::shuffle(img.begin(), img.end(), rng);
        w.tokens.push_back(perm_token(Permutation(std::move(img)), inv));
        break;
      }
      case 1: {
        auto [i, j] = distinct_pair();
        w.tokens.push_back(fr_token(i, j, inv));
        break;
      }
      case 2: {
        auto [i, j] = distinct_pair();
        w.tokens.push_back(eps_token(i, j, entry(rng), inv));
        break;
      }
      case 3:
        w.tokens.push_back(delta_token(gen(rng), inv));
        break;
      default: {
        TranslationMatrix a(n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            a(r, c) = (r == c) ? -coin(rng) : entry(rng);
        w.tokens.push_back(trans_token(std::move(a), inv));
        break;
      }
    }
  }
  return w;
}

}  // namespace chw
