#include "hyperdga/pointset_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperdga/detail/fmt.hpp"
#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

std::string infer_format(const InputSpec& spec) {
  if (!spec.format.empty()) return spec.format;
  const auto dotpos = spec.path.rfind('.');
  const std::string ext = dotpos == std::string::npos ? "" : spec.path.substr(dotpos + 1);
  if (ext == "json") return "json";
  return "csv";
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& tok, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw ParseError(where + ": not a number: '" + tok + "'");
  return v;
}

LoadedPointSet load_csv(const InputSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw ParseError(spec.path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(spec.path + ": empty file");
  const auto header = split_csv_row(line);

  // Coordinate columns are x0.. for Lorentz, x1.. otherwise; an optional
  // label column may appear anywhere.
  const int first = spec.model == Model::Lorentz ? 0 : 1;
  std::vector<int> coord_cols;
  int label_col = -1;
  for (int c = 0; c < static_cast<int>(header.size()); ++c) {
    const std::string& h = header[c];
    if (h == "label") {
      label_col = c;
    } else if (h.size() >= 2 && h[0] == 'x') {
      coord_cols.push_back(c);
    } else {
      throw ParseError(spec.path + ": unexpected column '" + h + "'");
    }
  }
  for (int i = 0; i < static_cast<int>(coord_cols.size()); ++i) {
    const std::string expect = "x" + std::to_string(first + i);
    if (header[coord_cols[i]] != expect)
      throw ParseError(spec.path + ": expected column " + expect + ", found " +
                       header[coord_cols[i]]);
  }
  if (coord_cols.empty()) throw ParseError(spec.path + ": no coordinate columns");

  LoadedPointSet out;
  out.model = spec.model;
  out.dimension = static_cast<int>(coord_cols.size()) -
                  (spec.model == Model::Lorentz ? 1 : 0);
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_row(line);
    std::ostringstream where;
    where << spec.path << ":row " << row;
    if (cells.size() != header.size())
      throw ParseError(where.str() + ": expected " + std::to_string(header.size()) +
                       " cells, found " + std::to_string(cells.size()));
    Vec p;
    for (int c : coord_cols) p.push_back(parse_double(cells[c], where.str()));
    out.points.push_back(std::move(p));
    out.labels.push_back(label_col >= 0 ? cells[label_col]
                                        : spec.per_file_label.value_or(""));
  }
  return out;
}

LoadedPointSet load_json(const InputSpec& spec) {
  nlohmann::json j;
  try {
    std::ifstream in(spec.path);
    if (!in) throw ParseError(spec.path + ": cannot open file");
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(spec.path + ": " + e.what());
  }
  LoadedPointSet out;
  out.model = j.contains("model") ? model_from_name(j["model"].get<std::string>())
                                  : spec.model;
  if (!j.contains("points") || !j["points"].is_array())
    throw ParseError(spec.path + ": missing 'points' array");
  int row = 0;
  for (const auto& jp : j["points"]) {
    ++row;
    if (!jp.is_array())
      throw ParseError(spec.path + ": points[" + std::to_string(row - 1) +
                       "] is not an array");
    Vec p;
    for (const auto& c : jp) p.push_back(c.get<double>());
    out.points.push_back(std::move(p));
  }
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) out.labels.push_back(l.get<std::string>());
    if (out.labels.size() != out.points.size())
      throw ParseError(spec.path + ": labels/points length mismatch");
  } else {
    out.labels.assign(out.points.size(), spec.per_file_label.value_or(""));
  }
  if (!out.points.empty())
    out.dimension = static_cast<int>(out.points[0].size()) -
                    (out.model == Model::Lorentz ? 1 : 0);
  return out;
}

}  // namespace

LoadedPointSet load_point_set(const InputSpec& spec) {
  const std::string fmt = infer_format(spec);
  LoadedPointSet out = fmt == "json" ? load_json(spec) : load_csv(spec);
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (static_cast<int>(out.points[i].size()) !=
        out.dimension + (out.model == Model::Lorentz ? 1 : 0)) {
      std::ostringstream os;
      os << spec.path << ":row " << (i + 1) << ": inconsistent dimension";
      throw ParseError(os.str());
    }
  }
  if (out.points.empty()) throw ParseError(spec.path + ": no points");
  return out;
}

std::vector<Vec> to_klein_points(const LoadedPointSet& set, double boundary_margin) {
  std::vector<Vec> out;
  out.reserve(set.points.size());
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    try {
      out.push_back(to_klein({set.model, set.points[i]}, boundary_margin).coords);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "row " << (i + 1) << ": " << e.what();
      throw InvalidPoint(os.str());
    }
  }
  return out;
}

std::string points_to_csv(const std::vector<Vec>& points,
                          const std::vector<std::string>& labels) {
  std::ostringstream os;
  const std::size_t n = points.empty() ? 0 : points[0].size();
  for (std::size_t c = 0; c < n; ++c) os << (c ? "," : "") << "x" << (c + 1);
  os << ",label\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t c = 0; c < n; ++c)
      os << (c ? "," : "") << detail::fmt_g17(points[i][c]);
    os << "," << (i < labels.size() ? labels[i] : "") << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hyperdga
