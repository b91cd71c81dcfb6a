#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdga/models.hpp"

namespace hyperdga {

/// A point file as declared on the command line: CSV or JSON, carrying
/// points of one hyperbolic model plus optional per-row labels.
struct InputSpec {
  std::string path;
  std::string format;  // "csv", "json", or "" to infer from the extension
  Model model = Model::Klein;
  std::optional<std::string> per_file_label;
};

struct LoadedPointSet {
  Model model = Model::Klein;
  int dimension = 0;
  std::vector<Vec> points;          // raw coordinates in `model`
  std::vector<std::string> labels;  // empty strings when no label column
};

/// Reads a point file.
///
/// CSV: a header row names the columns; coordinates are x1..xn, with a
/// leading x0 for Lorentz input, and an optional trailing `label` column.
/// JSON: {"model": "...", "points": [[...], ...], "labels": [...]} with
/// model/labels optional. Parse and validation failures throw ParseError
/// with row-level diagnostics.
LoadedPointSet load_point_set(const InputSpec& spec);

/// Converts every point to Klein coordinates, validating on the way.
std::vector<Vec> to_klein_points(const LoadedPointSet& set,
                                 double boundary_margin = kDefaultBoundaryMargin);

/// CSV serialization of Klein points (x1..xn plus a label column),
/// 17 significant digits, byte-deterministic.
std::string points_to_csv(const std::vector<Vec>& points,
                          const std::vector<std::string>& labels);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hyperdga
