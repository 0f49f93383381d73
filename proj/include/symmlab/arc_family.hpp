#pragma once

#include <memory>
#include <vector>

#include "symmlab/arc_set.hpp"
#include "symmlab/geom.hpp"
#include "symmlab/region.hpp"
#include "symmlab/scalar_field.hpp"

namespace symmlab {

/// Analytic set whose slice at (r,z) is the single arc
/// { theta : |theta - theta_c(r,z)| < xi(r,z)/2 }, empty outside the domain
/// box. With theta_c == 0 this is the circular symmetral F_mu of
/// mu = r * xi. Fields are Lipschitz with the declared bound except along
/// the listed jump walls, which carry vertical boundary sheets.
class ArcFamilySet {
public:
  ArcFamilySet(Box domain, std::unique_ptr<ScalarField> xi,
               std::unique_ptr<ScalarField> theta_c, double lipschitz_bound,
               std::vector<JumpWall> walls = {});

  ArcFamilySet(const ArcFamilySet& o);
  ArcFamilySet& operator=(const ArcFamilySet& o);
  ArcFamilySet(ArcFamilySet&&) = default;
  ArcFamilySet& operator=(ArcFamilySet&&) = default;

  const Box& domain() const { return domain_; }
  bool planar() const { return !domain_.has_axis2; }
  double lipschitz_bound() const { return lipschitz_; }
  const std::vector<JumpWall>& walls() const { return walls_; }
  const ScalarField& xi_field() const { return *xi_; }
  const ScalarField& theta_c_field() const { return *theta_c_; }

  /// xi clamped to [0, 2pi].
  double xi(double r, double z = 0.0) const;
  double theta_c(double r, double z = 0.0) const;

  AngularArcSet slice(double r, double z = 0.0) const;
  bool contains(Vec2 x, double z = 0.0) const;

private:
  Box domain_;
  std::unique_ptr<ScalarField> xi_;
  std::unique_ptr<ScalarField> theta_c_;
  double lipschitz_ = 0.0;
  std::vector<JumpWall> walls_;
};

}  // namespace symmlab
