#include <chw/parser.hpp>

#include <cctype>

namespace chw {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

constexpr unsigned long kMaxWordExponent = 100'000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  std::string found() const {
    if (done()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    std::string s;
    if (accept('-')) s = "-";
    s += digits();
    return Integer(s);
  }

  Gen index(std::size_t n) {
    const std::size_t start = pos_;
    const Integer v(digits());
    if (v < 1 || v > static_cast<unsigned long>(n))
      fail_at("index " + v.get_str() + " outside 1.." + std::to_string(n), start);
    return static_cast<Gen>(v.get_si());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool starts_factor(char c) { return c == 'x' || c == '('; }

std::vector<WordFactor> parse_factors(Cursor& cur, std::size_t n) {
  std::vector<WordFactor> out;
  cur.skip_space();
  while (starts_factor(cur.peek())) {
    WordFactor f;
    if (cur.accept('x')) {
      f.generator = cur.index(n);
    } else {
      cur.expect('(');
      const std::size_t open = cur.pos() - 1;
      f.group = parse_factors(cur, n);
      if (f.group.empty()) cur.fail_at("empty parentheses", open);
      cur.skip_space();
      cur.expect(')');
    }
    if (cur.accept('^')) f.exponent = cur.integer();
    out.push_back(std::move(f));
    cur.skip_space();
  }
  return out;
}

LatticeVector parse_vector(Cursor& cur, std::size_t n) {
  const std::size_t start = cur.pos();
  cur.expect('[');
  std::vector<Integer> coords;
  do {
    cur.skip_space();
    coords.push_back(cur.integer());
    cur.skip_space();
  } while (cur.accept(','));
  cur.expect(']');
  if (coords.size() != n)
    cur.fail_at("shift has " + std::to_string(coords.size()) + " entries, expected " +
                    std::to_string(n),
                start);
  return LatticeVector(std::move(coords));
}

GroupElement eval_factors(const std::vector<WordFactor>& factors, std::size_t n) {
  GroupElement g = GroupElement::identity(n);
  for (const auto& f : factors) {
    const GroupElement base = f.generator ? GroupElement::generator(n, f.generator)
                                          : eval_factors(f.group, n);
    // Outside x^2 in A the word part grows linearly with the exponent.
    if (!multiply(base, base).in_a() && abs(f.exponent) > kMaxWordExponent)
      throw ResourceLimit("exponent " + f.exponent.get_str() +
                          " too large for an element of infinite order");
    g = multiply(g, power(base, f.exponent));
  }
  return g;
}

std::vector<Integer> parse_int_list(Cursor& cur) {
  cur.expect('[');
  std::vector<Integer> out;
  do {
    cur.skip_space();
    out.push_back(cur.integer());
    cur.skip_space();
  } while (cur.accept(','));
  cur.expect(']');
  return out;
}

std::pair<Gen, Gen> parse_pair(Cursor& cur, std::size_t n) {
  cur.expect('[');
  cur.skip_space();
  const Gen i = cur.index(n);
  cur.skip_space();
  cur.expect(',');
  cur.skip_space();
  const Gen j = cur.index(n);
  cur.skip_space();
  cur.expect(']');
  return {i, j};
}

AutoToken parse_token(Cursor& cur, std::size_t n) {
  const std::size_t start = cur.pos();
  const char kind = cur.peek();
  AutoToken token;
  switch (kind) {
    case 'p': {
      cur.accept('p');
      const std::vector<Integer> img = parse_int_list(cur);
      if (img.size() != n)
        cur.fail_at("permutation has " + std::to_string(img.size()) + " images, expected " +
                        std::to_string(n),
                    start);
      std::vector<Gen> gens;
      for (const auto& v : img) {
        if (v < 1 || v > static_cast<unsigned long>(n))
          cur.fail_at("permutation image " + v.get_str() + " outside 1.." + std::to_string(n),
                      start);
        gens.push_back(static_cast<Gen>(v.get_si()));
      }
      try {
        token = perm_token(Permutation(std::move(gens)));
      } catch (const std::invalid_argument& e) {
        cur.fail_at(e.what(), start);
      }
      break;
    }
    case 'a':
    case 'e': {
      cur.accept(kind);
      const auto [i, j] = parse_pair(cur, n);
      if (i == j) cur.fail_at(std::string(1, kind) + "[i,j] needs i != j", start);
      if (kind == 'a') {
        token = fr_token(i, j);
      } else {
        Integer k = 1;
        if (cur.accept('^')) k = cur.integer();
        token = eps_token(i, j, k);
      }
      break;
    }
    case 'd': {
      cur.accept('d');
      cur.expect('[');
      cur.skip_space();
      const Gen i = cur.index(n);
      cur.skip_space();
      cur.expect(']');
      token = delta_token(i);
      break;
    }
    case 't': {
      cur.accept('t');
      cur.expect('[');
      std::vector<std::vector<Integer>> rows;
      do {
        cur.skip_space();
        rows.push_back(parse_int_list(cur));
        cur.skip_space();
      } while (cur.accept(','));
      cur.expect(']');
      if (rows.size() != n)
        cur.fail_at("translation matrix needs " + std::to_string(n) + " rows", start);
      for (const auto& r : rows)
        if (r.size() != n)
          cur.fail_at("translation matrix needs " + std::to_string(n) + " columns", start);
      TranslationMatrix a(IntMatrix::from_rows(rows, n));
      if (!is_unit(a)) cur.fail_at("translation matrix is not a unit", start);
      token = trans_token(std::move(a));
      break;
    }
    default:
      cur.fail("expected one of p a e d t" + cur.found());
  }
  if (cur.accept('\'')) token.inverse = true;
  return token;
}

}  // namespace

WordExpr parse_word(std::string_view text, std::size_t n) {
  if (n == 0) throw ParseError("rank must be positive", 0);
  Cursor cur(text);
  WordExpr expr;
  expr.factors = parse_factors(cur, n);
  cur.skip_space();
  if (cur.accept(';')) {
    cur.skip_space();
    expr.shift = parse_vector(cur, n);
    cur.skip_space();
  }
  if (!cur.done()) cur.fail("unexpected character" + cur.found());
  if (expr.factors.empty() && !expr.shift) cur.fail_at("empty word", 0);
  return expr;
}

GroupElement eval_word(const WordExpr& expr, std::size_t n) {
  GroupElement g = eval_factors(expr.factors, n);
  if (expr.shift) g = multiply(g, embed_a(*expr.shift));
  return g;
}

GroupElement parse_element(std::string_view text, std::size_t n) {
  return eval_word(parse_word(text, n), n);
}

AutoWord parse_autoword(std::string_view text, std::size_t n) {
  if (n == 0) throw ParseError("rank must be positive", 0);
  Cursor cur(text);
  AutoWord word{n, {}};
  cur.skip_space();
  while (!cur.done()) {
    word.tokens.push_back(parse_token(cur, n));
    const bool spaced = !cur.done() && std::isspace(static_cast<unsigned char>(cur.peek()));
    cur.skip_space();
    if (!cur.done() && !spaced) cur.fail("tokens must be separated by whitespace" + cur.found());
  }
  return word;
}

}  // namespace chw
