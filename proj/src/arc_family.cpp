#include "symmlab/arc_family.hpp"

#include <algorithm>
#include <cmath>

namespace symmlab {

ArcFamilySet::ArcFamilySet(Box domain, std::unique_ptr<ScalarField> xi,
                           std::unique_ptr<ScalarField> theta_c,
                           double lipschitz_bound, std::vector<JumpWall> walls)
    : domain_(domain),
      xi_(std::move(xi)),
      theta_c_(std::move(theta_c)),
      lipschitz_(lipschitz_bound),
      walls_(std::move(walls)) {
  SYMMLAB_REQUIRE(domain_.lo1 >= 0.0 && domain_.hi1 > domain_.lo1,
                  "arc family domain must lie in r >= 0");
  SYMMLAB_REQUIRE(xi_ && theta_c_, "arc family needs both fields");
  SYMMLAB_REQUIRE(lipschitz_ >= 0.0, "negative Lipschitz bound");
  // Spot-check the compatibility bound 0 <= xi <= 2pi away from walls.
  const int m = 17;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < (domain_.has_axis2 ? m : 1); ++j) {
      const double a = domain_.lo1 + (i + 0.5) * (domain_.hi1 - domain_.lo1) / m;
      const double b = domain_.has_axis2
                           ? domain_.lo2 + (j + 0.5) * (domain_.hi2 - domain_.lo2) / m
                           : 0.0;
      const double x = xi_->eval(a, b);
      SYMMLAB_REQUIRE(x > -1e-9 && x < kTwoPi + 1e-9,
                      "xi out of [0, 2pi]: broken source representation");
    }
  }
}

ArcFamilySet::ArcFamilySet(const ArcFamilySet& o)
    : domain_(o.domain_),
      xi_(o.xi_->clone()),
      theta_c_(o.theta_c_->clone()),
      lipschitz_(o.lipschitz_),
      walls_(o.walls_) {}

ArcFamilySet& ArcFamilySet::operator=(const ArcFamilySet& o) {
  if (this != &o) {
    domain_ = o.domain_;
    xi_ = o.xi_->clone();
    theta_c_ = o.theta_c_->clone();
    lipschitz_ = o.lipschitz_;
    walls_ = o.walls_;
  }
  return *this;
}

double ArcFamilySet::xi(double r, double z) const {
  return std::clamp(xi_->eval(r, z), 0.0, kTwoPi);
}

double ArcFamilySet::theta_c(double r, double z) const {
  return theta_c_->eval(r, z);
}

AngularArcSet ArcFamilySet::slice(double r, double z) const {
  if (!domain_.contains(r, z)) return AngularArcSet::empty_set(r);
  const double w = xi(r, z);
  if (w < kAngleEps) return AngularArcSet::empty_set(r);
  // The slice at xi = 2pi misses only one point of the circle, which is
  // H^1-null: represent it as full.
  if (w >= kTwoPi - kAngleEps) return AngularArcSet::full_circle(r);
  return AngularArcSet::centered(r, theta_c(r, z), w);
}

bool ArcFamilySet::contains(Vec2 x, double z) const {
  const double r = norm(x);
  if (r <= 0.0 || !domain_.contains(r, z)) return false;
  const double w = xi(r, z);
  if (w < kAngleEps) return false;
  return std::abs(angle_diff(angle_of(x), theta_c(r, z))) < w / 2.0;
}

}  // namespace symmlab
