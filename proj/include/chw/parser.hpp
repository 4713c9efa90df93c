#pragma once

// Text syntax for group elements and automorphism words.
//
//   element := word? (';' vector)?        at least one part present
//   word    := factor+
//   factor  := atom ('^' int)?
//   atom    := 'x' digits | '(' word ')'
//   vector  := '[' int (',' int)* ']'     n entries, multiplied on the right
//
// so every string produced by to_string(GroupElement) parses back to the
// same element.
//
// Automorphism words are whitespace-separated tokens
//   p[s1,...,sn]  a[i,j]  e[i,j]  e[i,j]^k  d[i]  t[[row],...,[row]]
// each optionally followed by ' for the inverse. The rightmost token acts
// first.

#include <chw/automorphisms.hpp>
#include <chw/group_core.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chw {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct WordFactor {
  Gen generator = 0;  // 0 marks a parenthesised group
  std::vector<WordFactor> group;
  Integer exponent{1};
};

struct WordExpr {
  std::vector<WordFactor> factors;
  std::optional<LatticeVector> shift;
};

WordExpr parse_word(std::string_view text, std::size_t n);
GroupElement eval_word(const WordExpr& expr, std::size_t n);

/// parse_word followed by eval_word.
GroupElement parse_element(std::string_view text, std::size_t n);

AutoWord parse_autoword(std::string_view text, std::size_t n);

}  // namespace chw
