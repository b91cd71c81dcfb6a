#pragma once

#include <string>
#include <vector>

#include "hyperdga/power_delaunay.hpp"

namespace hyperdga {

enum class SvgView { Klein, Poincare };

/// Renders the (pruned) complex over the unit disk. Kept edges are colored
/// by their endpoint groups — blue and orange for the two homogeneous
/// kinds, green for heterogeneous — and pruned edges are red. In the Klein
/// view geodesics are straight chords; the Poincare view converts the
/// points and draws circular arcs orthogonal to the boundary. Output is a
/// pure function of the inputs, byte for byte.
std::string render_svg(const DelaunayComplex& complex,
                       const std::vector<Vec>& klein_points,
                       const std::vector<int>& labels,
                       SvgView view = SvgView::Klein);

}  // namespace hyperdga
