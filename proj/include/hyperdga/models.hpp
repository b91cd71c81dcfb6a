#pragma once

#include <string>

#include "hyperdga/geom.hpp"

namespace hyperdga {

enum class Model { Lorentz, Poincare, Klein };

std::string model_name(Model m);
Model model_from_name(const std::string& name);

/// Points in the Poincare and Klein balls must keep this margin from the
/// ideal boundary; closer in, the power-site weights diverge.
inline constexpr double kDefaultBoundaryMargin = 1e-9;

/// arccosh arguments this far below 1 are treated as rounding noise and
/// clamped; anything further out raises NumericalDomain.
inline constexpr double kAcoshClampTolerance = 1e-12;

/// A point tagged with the hyperbolic model its coordinates live in.
/// Lorentz coordinates have n+1 entries (time-like first), ball models n.
struct HyperbolicPoint {
  Model model = Model::Klein;
  Vec coords;

  int dimension() const {
    return model == Model::Lorentz ? static_cast<int>(coords.size()) - 1
                                   : static_cast<int>(coords.size());
  }
};

/// Throws InvalidPoint unless `p` satisfies its model's constraints:
/// ball models need norm < 1 - margin, the hyperboloid needs
/// <z,z>_L = -1 within 1e-9 and z0 > 0.
void validate_point(const HyperbolicPoint& p,
                    double boundary_margin = kDefaultBoundaryMargin);

/// Minkowski bilinear form -z0*w0 + sum_i zi*wi on R^{n+1}.
double lorentz_inner(const Vec& z, const Vec& w);

// Isometric conversions into and out of the Klein ball. The forward maps
// are z -> (z1/z0, ..., zn/z0) from the hyperboloid and z -> 2z/(1+|z|^2)
// from the Poincare ball; the inverses are their analytic inverses.
HyperbolicPoint lorentz_to_klein(const HyperbolicPoint& p,
                                 double boundary_margin = kDefaultBoundaryMargin);
HyperbolicPoint poincare_to_klein(const HyperbolicPoint& p,
                                  double boundary_margin = kDefaultBoundaryMargin);
HyperbolicPoint klein_to_poincare(const HyperbolicPoint& p,
                                  double boundary_margin = kDefaultBoundaryMargin);
HyperbolicPoint klein_to_lorentz(const HyperbolicPoint& p,
                                 double boundary_margin = kDefaultBoundaryMargin);

/// Converts a point in any supported model to Klein coordinates.
HyperbolicPoint to_klein(const HyperbolicPoint& p,
                         double boundary_margin = kDefaultBoundaryMargin);

/// Geodesic distance in the Klein ball,
/// arccosh((1 - <x,y>) / sqrt((1-|x|^2)(1-|y|^2))).
/// The numerator is written so the argument is >= 1 on the open ball.
double klein_distance(const Vec& x, const Vec& y,
                      double boundary_margin = kDefaultBoundaryMargin);

/// Geodesic distance in the Poincare ball,
/// arccosh(1 + 2|x-y|^2 / ((1-|x|^2)(1-|y|^2))).
double poincare_distance(const Vec& x, const Vec& y,
                         double boundary_margin = kDefaultBoundaryMargin);

/// Geodesic distance on the hyperboloid, arccosh(-<z,z'>_L).
/// The bilinear form is <= -1 between hyperboloid points, hence the sign.
double lorentz_distance(const Vec& z, const Vec& zp);

}  // namespace hyperdga
