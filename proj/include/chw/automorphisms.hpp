#pragma once

// Named automorphisms of G_n, formal words in them, and the maps they induce
// on W and on A.
//
//   alpha_sigma : x_i -> x_{sigma(i)}
//   alpha_i^j   : x_i -> x_j x_i x_j^{-1}
//   epsilon_ij  : x_i -> x_i x_j^2
//   delta_i     : x_i -> x_i^{-1}
//
// each fixing the generators not listed.

#include <chw/endomorphism.hpp>
#include <chw/translation_monoid.hpp>
#include <chw/word_algebra.hpp>

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace chw {

struct PermToken {
  Permutation sigma;
};
struct FrToken {
  Gen i;
  Gen j;
};
struct EpsToken {
  Gen i;
  Gen j;
  Integer exponent{1};
};
struct DeltaToken {
  Gen i;
};
struct TransToken {
  TranslationMatrix a;
};

struct AutoToken {
  std::variant<PermToken, FrToken, EpsToken, DeltaToken, TransToken> op;
  bool inverse = false;
};

AutoToken perm_token(Permutation sigma, bool inverse = false);
AutoToken fr_token(Gen i, Gen j, bool inverse = false);
AutoToken eps_token(Gen i, Gen j, Integer exponent = 1, bool inverse = false);
AutoToken delta_token(Gen i, bool inverse = false);
AutoToken trans_token(TranslationMatrix a, bool inverse = false);

/// Formal product of named generators. Evaluation composes left to right as
/// written, so the rightmost token acts first.
struct AutoWord {
  std::size_t rank = 0;
  std::vector<AutoToken> tokens;
};

/// Throws on out-of-range or coincident indices.
void validate(const AutoToken& token, std::size_t n);

GEndomorphism named(const AutoToken& token, std::size_t n);
GEndomorphism evaluate(const AutoWord& word);
AutoWord invert_word(const AutoWord& word);

std::string to_string(const AutoToken& token);
std::string to_string(const AutoWord& word);

WAutomorphism induced_w(const GEndomorphism& phi);

/// Row i is the exponent vector of phi(x_i^2), which must lie in A.
IntMatrix induced_matrix(const GEndomorphism& phi);

/// The matrix a with phi = t_a when phi induces the identity on W.
std::optional<TranslationMatrix> translation_part(const GEndomorphism& phi);

/// First g in the normal-form box (canonical order) with inner(g) = phi.
std::optional<GroupElement> inner_witness(const GEndomorphism& phi,
                                          std::size_t max_len, std::size_t box);

/// Pair (f, F) with f acting on column coordinate vectors of A.
struct SemiLinearPair {
  IntMatrix f;
  WAutomorphism F;
};

/// f rho(x_k) = rho(F(x_k)) f for every generator. Throws if f is not
/// unimodular.
bool is_semilinear(const IntMatrix& f, const WAutomorphism& F);

/// (induced_matrix(phi)^T, induced_w(phi)): the transpose turns the
/// row-per-generator layout into the linear map on coordinates.
SemiLinearPair induced_pair(const GEndomorphism& phi);

/// (P_sigma, alpha_sigma) with P_sigma e_i = e_{sigma(i)}.
SemiLinearPair sn_section(const Permutation& sigma);

/// Random word of `length` tokens over the named generators; Eps exponents
/// and Trans entries are drawn from [-bound, bound].
AutoWord random_autoword(std::size_t n, std::size_t length, std::mt19937_64& rng,
                         long bound = 4);

}  // namespace chw
