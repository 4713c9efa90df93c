#include <chw/endomorphism.hpp>

namespace chw {

GEndomorphism::GEndomorphism(std::vector<GroupElement> images)
    : images_(std::move(images)) {
  for (const auto& g : images_) require_same_rank(g.rank(), images_.size());
}

GEndomorphism GEndomorphism::identity(std::size_t n) {
  std::vector<GroupElement> img;
  img.reserve(n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    img.push_back(GroupElement::generator(n, i));
  return GEndomorphism(std::move(img));
}

GroupElement apply(const GEndomorphism& phi, const GroupElement& g) {
  require_same_rank(phi.rank(), g.rank());
  const std::size_t n = g.rank();
  GroupElement out = GroupElement::identity(n);
  for (Gen i : g.word().letters()) out = multiply(out, phi.image(i));
  for (std::size_t k = 0; k < n; ++k) {
    if (g.shift()[k] == 0) continue;
    const GroupElement& y = phi.images()[k];
    out = multiply(out, power(multiply(y, y), g.shift()[k]));
  }
  return out;
}

GEndomorphism compose(const GEndomorphism& phi, const GEndomorphism& psi) {
  require_same_rank(phi.rank(), psi.rank());
  std::vector<GroupElement> img;
  img.reserve(psi.rank());
  for (const auto& g : psi.images()) img.push_back(apply(phi, g));
  return GEndomorphism(std::move(img));
}

bool check_von_dyck(const std::vector<GroupElement>& images) {
  const std::size_t n = images.size();
  for (const auto& y : images) require_same_rank(y.rank(), n);
  std::vector<GroupElement> squares;
  squares.reserve(n);
  for (const auto& y : images) squares.push_back(multiply(y, y));
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement yi_inv = invert(images[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const GroupElement r =
          multiply(multiply(multiply(yi_inv, squares[j]), images[i]), squares[j]);
      if (!r.is_identity()) return false;
    }
  }
  return true;
}

GEndomorphism inner(const GroupElement& g) {
  const std::size_t n = g.rank();
  const GroupElement g_inv = invert(g);
  std::vector<GroupElement> img;
  img.reserve(n);
  for (Gen i = 1; i <= static_cast<Gen>(n); ++i)
    img.push_back(multiply(append_letter(g, i, 1), g_inv));
  return GEndomorphism(std::move(img));
}

}  // namespace chw
