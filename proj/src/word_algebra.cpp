#include <chw/word_algebra.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chw {

ReducedWord::ReducedWord(std::size_t rank, std::vector<Gen> letters)
    : rank_(rank), letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    require_generator(letters_[k], rank_);
    if (k > 0 && letters_[k] == letters_[k - 1])
      throw std::invalid_argument("word is not reduced at position " +
                                  std::to_string(k));
  }
}

ReducedWord ReducedWord::reduce(std::size_t rank, std::span<const Gen> letters) {
  ReducedWord w(rank);
  for (Gen i : letters) w.push(i);
  return w;
}

void ReducedWord::push(Gen i) {
  require_generator(i, rank_);
  if (!letters_.empty() && letters_.back() == i)
    letters_.pop_back();
  else
    letters_.push_back(i);
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w(rank_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

ReducedWord w_multiply(const ReducedWord& lhs, const ReducedWord& rhs) {
  require_same_rank(lhs.rank(), rhs.rank());
  ReducedWord out = lhs;
  for (Gen i : rhs.letters()) out.push(i);
  return out;
}

std::vector<int> sign_vector(const ReducedWord& w) {
  const std::size_t n = w.rank();
  std::vector<std::size_t> count(n, 0);
  for (Gen i : w.letters()) ++count[static_cast<std::size_t>(i - 1)];
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j)
    signs[j] = ((w.length() - count[j]) % 2 == 0) ? 1 : -1;
  return signs;
}

Permutation::Permutation(std::vector<Gen> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Gen v : images_) {
    require_generator(v, images_.size());
    const auto k = static_cast<std::size_t>(v - 1);
    if (seen[k])
      throw std::invalid_argument("not a permutation: repeated image " +
                                  std::to_string(v));
    seen[k] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Gen> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, Gen i, Gen j) {
  auto img = identity(n).images_;
  require_generator(i, n);
  require_generator(j, n);
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(std::size_t n) {
  std::vector<Gen> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Gen>((k + 1) % n + 1);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Gen> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<Gen>(k + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<Gen>(k + 1)) return false;
  return true;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  require_same_rank(sigma.size(), tau.size());
  std::vector<Gen> img(sigma.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = sigma(tau.images()[k]);
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto img = Permutation::identity(n).images();
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> permutation_generators(std::size_t n) {
  std::vector<Permutation> out;
  for (Gen i = 1; i < static_cast<Gen>(n); ++i)
    out.push_back(Permutation::transposition(n, i, i + 1));
  out.push_back(Permutation::long_cycle(n));
  return out;
}

WAutomorphism::WAutomorphism(std::vector<ReducedWord> images)
    : images_(std::move(images)) {
  for (const auto& w : images_) {
    require_same_rank(w.rank(), images_.size());
    if (!(w * w).empty())
      throw std::invalid_argument("image " + to_string(w) +
                                  " is not an involution");
  }
}

WAutomorphism WAutomorphism::identity(std::size_t n) {
  std::vector<ReducedWord> img;
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    img.push_back(ReducedWord::letter(n, i));
  return WAutomorphism(std::move(img));
}

bool WAutomorphism::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k].letters() != std::vector<Gen>{static_cast<Gen>(k + 1)})
      return false;
  return true;
}

WAutomorphism w_perm_auto(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<ReducedWord> img;
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    img.push_back(ReducedWord::letter(n, sigma(i)));
  return WAutomorphism(std::move(img));
}

WAutomorphism w_fr_auto(std::size_t n, Gen i, Gen j) {
  require_generator(i, n);
  require_generator(j, n);
  if (i == j)
    throw std::invalid_argument("Fouxe-Rabinovitch generator needs i != j");
  auto img = WAutomorphism::identity(n).images();
  img[static_cast<std::size_t>(i - 1)] = ReducedWord(n, {j, i, j});
  return WAutomorphism(std::move(img));
}

ReducedWord w_apply(const WAutomorphism& f, const ReducedWord& w) {
  require_same_rank(f.rank(), w.rank());
  ReducedWord out(w.rank());
  for (Gen i : w.letters())
    for (Gen k : f.image(i).letters()) out.push(k);
  return out;
}

WAutomorphism w_compose(const WAutomorphism& f, const WAutomorphism& g) {
  require_same_rank(f.rank(), g.rank());
  std::vector<ReducedWord> img;
  img.reserve(g.rank());
  for (const auto& w : g.images()) img.push_back(w_apply(f, w));
  return WAutomorphism(std::move(img));
}

std::string to_string(const ReducedWord& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < w.length(); ++k)
    os << (k ? "," : "") << w.letters()[k];
  os << ']';
  return os.str();
}

std::string to_string(const Permutation& sigma) {
  std::ostringstream os;
  os << "p[";
  for (std::size_t k = 0; k < sigma.size(); ++k)
    os << (k ? "," : "") << sigma.images()[k];
  os << ']';
  return os.str();
}

}  // namespace chw
