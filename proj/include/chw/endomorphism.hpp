#pragma once

#include <chw/group_core.hpp>

#include <vector>

namespace chw {

/// Endomorphism of G_n given by the images of x_1, ..., x_n.
class GEndomorphism {
 public:
  GEndomorphism() = default;
  explicit GEndomorphism(std::vector<GroupElement> images);

  static GEndomorphism identity(std::size_t n);

  std::size_t rank() const { return images_.size(); }
  const std::vector<GroupElement>& images() const { return images_; }
  const GroupElement& image(Gen i) const {
    return images_[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const GEndomorphism&, const GEndomorphism&) = default;

 private:
  std::vector<GroupElement> images_;
};

/// Substitutes x_i -> image_i in the word part and (x_i^2)^z -> image_i^(2z)
/// in the A-part.
GroupElement apply(const GEndomorphism& phi, const GroupElement& g);

/// (phi o psi)(x) = phi(psi(x)).
GEndomorphism compose(const GEndomorphism& phi, const GEndomorphism& psi);

inline bool equal(const GEndomorphism& phi, const GEndomorphism& psi) {
  return phi == psi;
}

/// True iff y_i^{-1} y_j^2 y_i y_j^2 = 1 for every i != j, i.e. the images
/// define an endomorphism of G.
bool check_von_dyck(const std::vector<GroupElement>& images);

/// x -> g x g^{-1}
GEndomorphism inner(const GroupElement& g);

}  // namespace chw
