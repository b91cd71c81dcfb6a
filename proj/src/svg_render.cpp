#include "hyperdga/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

constexpr const char* kBlue = "#1f77b4";
constexpr const char* kOrange = "#ff7f0e";
constexpr const char* kGreen = "#2ca02c";
constexpr const char* kRed = "#d62728";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

// User coordinates: y flipped so math coordinates render upright.
double ux(const Vec& p) { return p[0]; }
double uy(const Vec& p) { return -p[1]; }

const char* edge_color(int la, int lb, bool kept) {
  if (!kept) return kRed;
  if (la != lb) return kGreen;
  return la == 0 ? kBlue : kOrange;
}

// Circle through u and v orthogonal to the unit circle: center c with
// 2<u,c> = 1+|u|^2 and 2<v,c> = 1+|v|^2. Near-diametral chords degenerate
// to straight lines.
bool geodesic_circle(const Vec& u, const Vec& v, Vec* center, double* radius) {
  const double a11 = 2.0 * u[0], a12 = 2.0 * u[1];
  const double a21 = 2.0 * v[0], a22 = 2.0 * v[1];
  const double b1 = 1.0 + norm2(u), b2 = 1.0 + norm2(v);
  const double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-12) return false;
  *center = {(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
  const double r2 = norm2(*center) - 1.0;
  if (r2 <= 0.0) return false;
  *radius = std::sqrt(r2);
  return true;
}

void emit_edge(std::ostringstream& os, const Vec& p, const Vec& q, const char* color,
               SvgView view) {
  if (view == SvgView::Klein) {
    os << "<line x1=\"" << num(ux(p)) << "\" y1=\"" << num(uy(p)) << "\" x2=\""
       << num(ux(q)) << "\" y2=\"" << num(uy(q)) << "\" stroke=\"" << color << "\"/>\n";
    return;
  }
  Vec c;
  double r = 0.0;
  if (!geodesic_circle(p, q, &c, &r)) {
    os << "<line x1=\"" << num(ux(p)) << "\" y1=\"" << num(uy(p)) << "\" x2=\""
       << num(ux(q)) << "\" y2=\"" << num(uy(q)) << "\" stroke=\"" << color << "\"/>\n";
    return;
  }
  // Short arc from p to q; the sweep flag picks the candidate whose center
  // is the orthogonal circle's center, evaluated in user (y-down) space.
  const double cross = (ux(p) - ux(c)) * (uy(q) - uy(c)) - (uy(p) - uy(c)) * (ux(q) - ux(c));
  const int sweep = cross > 0.0 ? 1 : 0;
  os << "<path d=\"M " << num(ux(p)) << " " << num(uy(p)) << " A " << num(r) << " "
     << num(r) << " 0 0 " << sweep << " " << num(ux(q)) << " " << num(uy(q))
     << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_svg(const DelaunayComplex& complex,
                       const std::vector<Vec>& klein_points,
                       const std::vector<int>& labels, SvgView view) {
  if (klein_points.size() != complex.sites.size() ||
      labels.size() != complex.sites.size())
    throw Error("render_svg: points/labels do not match the complex");
  if (complex.dimension != 2) throw Error("render_svg supports n = 2 only");

  std::vector<Vec> pts = klein_points;
  if (view == SvgView::Poincare) {
    for (Vec& p : pts) p = klein_to_poincare({Model::Klein, p}).coords;
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
        "<g stroke-width=\"0.006\" fill=\"none\">\n"
        "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#aaaaaa\"/>\n";
  // Removed edges go underneath the kept graph.
  for (bool kept_pass : {false, true}) {
    for (const ComplexEdge& e : complex.edges) {
      if (e.kept != kept_pass) continue;
      emit_edge(os, pts[e.a], pts[e.b], edge_color(labels[e.a], labels[e.b], e.kept),
                view);
    }
  }
  os << "</g>\n<g stroke=\"none\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "<circle cx=\"" << num(ux(pts[i])) << "\" cy=\"" << num(uy(pts[i]))
       << "\" r=\"0.012\" fill=\"" << (labels[i] == 0 ? kBlue : kOrange) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace hyperdga
