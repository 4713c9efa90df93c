#include <chw/group_core.hpp>

#include <sstream>
#include <stdexcept>

namespace chw {

GroupElement::GroupElement(ReducedWord word, LatticeVector shift)
    : word_(std::move(word)), shift_(std::move(shift)) {
  require_same_rank(word_.rank(), shift_.rank());
}

GroupElement GroupElement::generator(std::size_t rank, Gen i) {
  return GroupElement(ReducedWord::letter(rank, i), LatticeVector(rank));
}

namespace {

// In-place g <- g * x_i^sign.
//   w a * x_i = w x_i (x_i^{-1} a x_i) = w x_i rho(i) a
// and if w ends in i the two letters merge into x_i^2 = e_i.
// x_i^{-1} = x_i * (x_i^2)^{-1}.
void push_letter(ReducedWord& word, LatticeVector& shift, Gen i, int sign) {
  const std::size_t k = static_cast<std::size_t>(i - 1);
  for (std::size_t j = 0; j < shift.rank(); ++j)
    if (j != k) shift[j] = -shift[j];
  const bool cancels = !word.empty() && word.letters().back() == i;
  word.push(i);
  if (cancels) shift[k] += 1;
  if (sign < 0) shift[k] -= 1;
}

}  // namespace

GroupElement append_letter(const GroupElement& g, Gen i, int sign) {
  require_generator(i, g.rank());
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  ReducedWord word = g.word();
  LatticeVector shift = g.shift();
  push_letter(word, shift, i, sign);
  return GroupElement(std::move(word), std::move(shift));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_rank(g.rank(), h.rank());
  ReducedWord word = g.word();
  LatticeVector shift = g.shift();
  for (Gen i : h.word().letters()) push_letter(word, shift, i, 1);
  shift += h.shift();
  return GroupElement(std::move(word), std::move(shift));
}

GroupElement invert(const GroupElement& g) {
  // (w a)^{-1} = a^{-1} x_{i_k}^{-1} ... x_{i_1}^{-1}
  ReducedWord word(g.rank());
  LatticeVector shift = -g.shift();
  const auto& letters = g.word().letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    push_letter(word, shift, *it, -1);
  return GroupElement(std::move(word), std::move(shift));
}

GroupElement conjugate(const GroupElement& g, const GroupElement& by) {
  return multiply(multiply(by, g), invert(by));
}

GroupElement power(const GroupElement& g, const Integer& k) {
  GroupElement base = k < 0 ? invert(g) : g;
  Integer e = abs(k);
  GroupElement result = GroupElement::identity(g.rank());
  if (base.in_a()) {
    // A is abelian: scale directly.
    return GroupElement(ReducedWord(g.rank()), e * base.shift());
  }
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

LatticeVector square_shifted(Gen i, const LatticeVector& a) {
  require_generator(i, a.rank());
  const std::size_t k = static_cast<std::size_t>(i - 1);
  LatticeVector out(a.rank());
  out[k] = 2 * a[k] + 1;
  return out;
}

ReducedWord project_w(const GroupElement& g) { return g.word(); }

GroupElement embed_a(const LatticeVector& z) {
  return GroupElement(ReducedWord(z.rank()), z);
}

Integer ball_size(std::size_t n, std::size_t max_len, std::size_t box) {
  Integer words = 1;
  Integer layer = n;
  for (std::size_t k = 1; k <= max_len; ++k) {
    words += layer;
    layer *= static_cast<unsigned long>(n > 0 ? n - 1 : 0);
  }
  Integer shifts = 1;
  for (std::size_t k = 0; k < n; ++k) shifts *= static_cast<unsigned long>(2 * box + 1);
  return words * shifts;
}

void enumerate_ball(std::size_t n, std::size_t max_len, std::size_t box,
                    const std::function<bool(const GroupElement&)>& visit,
                    std::uint64_t cap) {
  const Integer count = ball_size(n, max_len, box);
  if (count > Integer(std::to_string(cap)))
    throw ResourceLimit("ball of " + count.get_str() +
                        " elements exceeds the cap of " + std::to_string(cap));

  const long b = static_cast<long>(box);
  auto visit_shifts = [&](const ReducedWord& w) {
    std::vector<long> z(n, -b);
    for (;;) {
      LatticeVector shift(n);
      for (std::size_t k = 0; k < n; ++k) shift[k] = z[k];
      if (!visit(GroupElement(w, std::move(shift)))) return false;
      std::size_t k = n;
      while (k > 0 && z[k - 1] == b) z[--k] = -b;
      if (k == 0) return true;
      ++z[k - 1];
    }
  };

  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0 && (n == 0 || (n == 1 && len > 1))) break;
    // Odometer over reduced words of this length in lexicographic order.
    std::vector<Gen> letters(len, 1);
    for (std::size_t k = 1; k < len; ++k) letters[k] = (letters[k - 1] == 1) ? 2 : 1;
    for (;;) {
      if (!visit_shifts(ReducedWord(n, letters))) return;
      // Advance to the next reduced word: bump the rightmost position that
      // can move, then fill the tail with the smallest admissible letters.
      std::size_t pos = len;
      bool advanced = false;
      while (pos > 0) {
        --pos;
        Gen next = letters[pos] + 1;
        if (pos > 0 && next == letters[pos - 1]) ++next;
        if (next <= static_cast<Gen>(n)) {
          letters[pos] = next;
          for (std::size_t k = pos + 1; k < len; ++k)
            letters[k] = (letters[k - 1] == 1) ? 2 : 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  for (Gen i : g.word().letters()) os << 'x' << i << ' ';
  os << "; " << to_string(g.shift());
  return os.str();
}

}  // namespace chw
