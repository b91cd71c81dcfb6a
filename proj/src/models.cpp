#include "hyperdga/models.hpp"

#include <cmath>
#include <sstream>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

// Shared arccosh with the documented clamping convention: arguments in
// [1 - kAcoshClampTolerance, 1) are rounding noise, anything lower is a
// caller bug or invalid data.
double checked_acosh(double arg, const char* where) {
  if (arg < 1.0) {
    if (arg >= 1.0 - kAcoshClampTolerance) return 0.0;
    std::ostringstream os;
    os << where << ": arccosh argument " << arg << " below domain";
    throw NumericalDomain(os.str());
  }
  return std::acosh(arg);
}

void require_ball(const Vec& x, double margin, const char* model) {
  const double n2 = norm2(x);
  if (!(n2 < (1.0 - margin) * (1.0 - margin))) {
    std::ostringstream os;
    os << model << " point with norm " << std::sqrt(n2)
       << " violates the boundary margin " << margin;
    throw InvalidPoint(os.str());
  }
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::Lorentz: return "lorentz";
    case Model::Poincare: return "poincare";
    case Model::Klein: return "klein";
  }
  return "unknown";
}

Model model_from_name(const std::string& name) {
  if (name == "lorentz") return Model::Lorentz;
  if (name == "poincare") return Model::Poincare;
  if (name == "klein") return Model::Klein;
  throw ParseError("unknown model name: " + name);
}

double lorentz_inner(const Vec& z, const Vec& w) {
  double s = -z[0] * w[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * w[i];
  return s;
}

void validate_point(const HyperbolicPoint& p, double boundary_margin) {
  if (p.coords.empty() || (p.model == Model::Lorentz && p.coords.size() < 2)) {
    throw InvalidPoint("point has too few coordinates for its model");
  }
  for (double c : p.coords) {
    if (!std::isfinite(c)) throw InvalidPoint("non-finite coordinate");
  }
  switch (p.model) {
    case Model::Lorentz: {
      const double q = lorentz_inner(p.coords, p.coords);
      if (std::abs(q + 1.0) > 1e-9) {
        std::ostringstream os;
        os << "hyperboloid constraint violated: <z,z>_L = " << q;
        throw InvalidPoint(os.str());
      }
      if (!(p.coords[0] > 0.0)) {
        throw InvalidPoint("hyperboloid point not on the upper sheet (z0 <= 0)");
      }
      break;
    }
    case Model::Poincare:
      require_ball(p.coords, boundary_margin, "Poincare");
      break;
    case Model::Klein:
      require_ball(p.coords, boundary_margin, "Klein");
      break;
  }
}

HyperbolicPoint lorentz_to_klein(const HyperbolicPoint& p, double boundary_margin) {
  if (p.model != Model::Lorentz) throw InvalidPoint("expected a Lorentz point");
  validate_point(p, boundary_margin);
  Vec k(p.coords.size() - 1);
  for (std::size_t i = 0; i + 1 < p.coords.size(); ++i) k[i] = p.coords[i + 1] / p.coords[0];
  return {Model::Klein, std::move(k)};
}

HyperbolicPoint poincare_to_klein(const HyperbolicPoint& p, double boundary_margin) {
  if (p.model != Model::Poincare) throw InvalidPoint("expected a Poincare point");
  validate_point(p, boundary_margin);
  const double f = 2.0 / (1.0 + norm2(p.coords));
  return {Model::Klein, scaled(p.coords, f)};
}

HyperbolicPoint klein_to_poincare(const HyperbolicPoint& p, double boundary_margin) {
  if (p.model != Model::Klein) throw InvalidPoint("expected a Klein point");
  validate_point(p, boundary_margin);
  // Inverse of k = 2z/(1+|z|^2): z = k / (1 + sqrt(1-|k|^2)).
  const double f = 1.0 / (1.0 + std::sqrt(1.0 - norm2(p.coords)));
  return {Model::Poincare, scaled(p.coords, f)};
}

HyperbolicPoint klein_to_lorentz(const HyperbolicPoint& p, double boundary_margin) {
  if (p.model != Model::Klein) throw InvalidPoint("expected a Klein point");
  validate_point(p, boundary_margin);
  const double g = 1.0 / std::sqrt(1.0 - norm2(p.coords));
  Vec z(p.coords.size() + 1);
  z[0] = g;
  for (std::size_t i = 0; i < p.coords.size(); ++i) z[i + 1] = g * p.coords[i];
  return {Model::Lorentz, std::move(z)};
}

HyperbolicPoint to_klein(const HyperbolicPoint& p, double boundary_margin) {
  switch (p.model) {
    case Model::Lorentz: return lorentz_to_klein(p, boundary_margin);
    case Model::Poincare: return poincare_to_klein(p, boundary_margin);
    case Model::Klein:
      validate_point(p, boundary_margin);
      return p;
  }
  throw InvalidPoint("unknown model");
}

double klein_distance(const Vec& x, const Vec& y, double boundary_margin) {
  require_ball(x, boundary_margin, "Klein");
  require_ball(y, boundary_margin, "Klein");
  const double arg =
      (1.0 - dot(x, y)) / std::sqrt((1.0 - norm2(x)) * (1.0 - norm2(y)));
  return checked_acosh(arg, "klein_distance");
}

double poincare_distance(const Vec& x, const Vec& y, double boundary_margin) {
  require_ball(x, boundary_margin, "Poincare");
  require_ball(y, boundary_margin, "Poincare");
  const double arg =
      1.0 + 2.0 * dist2(x, y) / ((1.0 - norm2(x)) * (1.0 - norm2(y)));
  return checked_acosh(arg, "poincare_distance");
}

double lorentz_distance(const Vec& z, const Vec& zp) {
  validate_point({Model::Lorentz, z});
  validate_point({Model::Lorentz, zp});
  return checked_acosh(-lorentz_inner(z, zp), "lorentz_distance");
}

}  // namespace hyperdga
