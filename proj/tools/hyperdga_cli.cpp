#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperdga/detail/fmt.hpp"
#include "hyperdga/errors.hpp"
#include "hyperdga/pipeline.hpp"
#include "hyperdga/pointset_io.hpp"
#include "hyperdga/svg_render.hpp"
#include "hyperdga/synthdata.hpp"

namespace {

using namespace hyperdga;
using detail::fmt_g17;

double env_override(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const double parsed = std::strtod(v, &end);
  if (end == v || *end != '\0') throw ParseError(std::string(name) + ": not a number");
  return parsed;
}

struct MetricSelection {
  bool hyperdga = true, chamfer = true, wasserstein = true;
  bool wasserstein_explicit = false;
};

MetricSelection parse_metrics(const std::string& list, bool given) {
  if (!given) return {};
  MetricSelection sel;
  sel.hyperdga = sel.chamfer = sel.wasserstein = false;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "hyperdga") {
      sel.hyperdga = true;
    } else if (tok == "chamfer") {
      sel.chamfer = true;
    } else if (tok == "wasserstein") {
      sel.wasserstein = true;
      sel.wasserstein_explicit = true;
    } else {
      throw ParseError("unknown metric: " + tok);
    }
  }
  return sel;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string matrix_json(const std::vector<std::vector<std::optional<double>>>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j)
      os << (j ? "," : "") << (m[i][j] ? fmt_g17(*m[i][j]) : std::string("null"));
    os << "]";
  }
  os << "]";
  return os.str();
}

int run_score(const InputSpec& a_spec, const InputSpec& b_spec, bool have_b,
              const MetricSelection& metrics, const std::string& out_path,
              const std::string& svg_path, const std::string& view,
              const std::string& dump_complex_path, const std::string& dump_prune_path) {
  PipelineOptions opts;
  opts.boundary_margin = env_override("HYPERDGA_DELTA_BOUNDARY", kDefaultBoundaryMargin);
  opts.eps_prune = env_override("HYPERDGA_EPS_PRUNE", 1e-10);
  opts.want_hyperdga = metrics.hyperdga;
  opts.want_chamfer = metrics.chamfer;
  opts.want_wasserstein = metrics.wasserstein;
  opts.wasserstein_required = metrics.wasserstein_explicit;
  opts.keep_complex = !svg_path.empty() || !dump_complex_path.empty() ||
                      !dump_prune_path.empty();

  if (have_b) {
    const LoadedPointSet a = load_point_set(a_spec);
    const LoadedPointSet b = load_point_set(b_spec);
    PipelineResult res =
        score_sets(to_klein_points(a, opts.boundary_margin),
                   to_klein_points(b, opts.boundary_margin), opts,
                   model_name(a.model));
    emit(res.report.to_json() + "\n", out_path);
    if (!svg_path.empty()) {
      const SvgView v = view == "poincare" ? SvgView::Poincare : SvgView::Klein;
      write_file(svg_path, render_svg(*res.complex, res.site_points, res.site_labels, v));
    }
    if (!dump_complex_path.empty())
      write_file(dump_complex_path, complex_to_json(*res.complex) + "\n");
    if (!dump_prune_path.empty())
      write_file(dump_prune_path, res.prune_report.to_json() + "\n");
    return 0;
  }

  // Pairwise mode: one file, groups from its label column, one symmetric
  // score matrix per metric.
  const LoadedPointSet a = load_point_set(a_spec);
  std::map<std::string, std::vector<Vec>> groups;
  const std::vector<Vec> klein = to_klein_points(a, opts.boundary_margin);
  for (std::size_t i = 0; i < klein.size(); ++i) {
    if (a.labels[i].empty())
      throw ParseError(a_spec.path + ":row " + std::to_string(i + 1) +
                       ": pairwise mode needs a label for every point");
    groups[a.labels[i]].push_back(klein[i]);
  }
  if (groups.size() < 2) throw ParseError("pairwise mode needs at least two labels");
  std::vector<std::string> names;
  for (const auto& [name, _] : groups) names.push_back(name);
  const std::size_t k = names.size();
  using OptMatrix = std::vector<std::vector<std::optional<double>>>;
  OptMatrix mh(k, std::vector<std::optional<double>>(k)), mc = mh, mw = mh;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PipelineOptions pair_opts = opts;
      pair_opts.keep_complex = false;
      const PipelineResult res =
          score_sets(groups[names[i]], groups[names[j]], pair_opts, model_name(a.model));
      mh[i][j] = mh[j][i] = res.report.hyperdga;
      mc[i][j] = mc[j][i] = res.report.chamfer;
      mw[i][j] = mw[j][i] = res.report.wasserstein;
    }
  }
  std::ostringstream os;
  os << "{\"groups\":[";
  for (std::size_t i = 0; i < k; ++i) os << (i ? "," : "") << "\"" << names[i] << "\"";
  os << "],\"hyperdga\":" << matrix_json(mh) << ",\"chamfer\":" << matrix_json(mc)
     << ",\"wasserstein\":" << matrix_json(mw) << "}\n";
  emit(os.str(), out_path);
  return 0;
}

int run_sweep(int depth, const std::vector<double>& eps_list,
              const std::vector<std::uint64_t>& seeds, const std::string& out_dir,
              double edge_length, double displacement) {
  PipelineOptions opts;
  opts.boundary_margin = env_override("HYPERDGA_DELTA_BOUNDARY", kDefaultBoundaryMargin);
  opts.eps_prune = env_override("HYPERDGA_EPS_PRUNE", 1e-10);
  LayoutOptions ref_opts;
  ref_opts.edge_length = edge_length;
  ref_opts.displacement_scale = displacement;
  ref_opts.boundary_margin = opts.boundary_margin;
  LayoutOptions lopts = ref_opts;
  lopts.displacement_bias = 1.0;  // perturbed copies must never sit on T exactly
  for (double e : eps_list)
    if (e < 0.0 || e > 1.0) throw ParseError("eps values must lie in [0, 1]");

  std::filesystem::create_directories(out_dir);
  std::ostringstream json;
  json << "{\"depth\":" << depth << ",\"edge_length\":" << fmt_g17(edge_length)
       << ",\"displacement_scale\":" << fmt_g17(displacement)
       << ",\"rng\":\"mt19937_64\",\"runs\":[";
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    const std::uint64_t seed = seeds[si];
    const BinaryTreeDataset ds = generate_tree(depth, seed);
    const std::vector<Vec> reference = tree_layout(ds, ref_opts);
    std::vector<double> vh, vc, vw;
    std::ostringstream csv;
    csv << "eps,hyperdga,chamfer,wasserstein\n";
    for (std::size_t ei = 0; ei < eps_list.size(); ++ei) {
      // Independent flips per eps value, deterministic in (seed, position).
      const std::uint64_t flip_seed = seed * 1000003ull + ei;
      const auto vectors = perturb(ds, eps_list[ei], flip_seed);
      const std::vector<Vec> layout = vector_layout(ds, vectors, lopts);
      const PipelineResult res = score_sets(reference, layout, opts, "klein");
      vh.push_back(*res.report.hyperdga);
      vc.push_back(*res.report.chamfer);
      vw.push_back(*res.report.wasserstein);
      csv << fmt_g17(eps_list[ei]) << "," << fmt_g17(vh.back()) << ","
          << fmt_g17(vc.back()) << "," << fmt_g17(vw.back()) << "\n";
    }
    write_file(out_dir + "/sweep_seed" + std::to_string(seed) + ".csv", csv.str());

    auto corr = [&](const std::vector<double>& v,
                    double (*fn)(std::span<const double>, std::span<const double>)) {
      try {
        return fmt_g17(fn(v, eps_list));
      } catch (const ZeroVariance&) {
        return std::string("null");
      }
    };
    json << (si ? "," : "") << "{\"seed\":" << seed << ",\"eps\":[";
    for (std::size_t ei = 0; ei < eps_list.size(); ++ei)
      json << (ei ? "," : "") << fmt_g17(eps_list[ei]);
    auto dump_vals = [&](const char* key, const std::vector<double>& v) {
      json << ",\"" << key << "\":[";
      for (std::size_t ei = 0; ei < v.size(); ++ei)
        json << (ei ? "," : "") << fmt_g17(v[ei]);
      json << "]";
    };
    json << "]";
    dump_vals("hyperdga", vh);
    dump_vals("chamfer", vc);
    dump_vals("wasserstein", vw);
    json << ",\"pearson\":{\"hyperdga\":" << corr(vh, pearson)
         << ",\"chamfer\":" << corr(vc, pearson)
         << ",\"wasserstein\":" << corr(vw, pearson) << "}"
         << ",\"spearman\":{\"hyperdga\":" << corr(vh, spearman)
         << ",\"chamfer\":" << corr(vc, spearman)
         << ",\"wasserstein\":" << corr(vw, spearman) << "}}";
  }
  json << "]}\n";
  write_file(out_dir + "/sweep.json", json.str());
  std::cout << "wrote " << out_dir << "/sweep.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Similarity scores for point sets in hyperbolic space"};
  app.require_subcommand(1);

  // score
  auto* score = app.add_subcommand("score", "Score two point sets");
  std::string a_path, b_path, model = "klein", metrics_list, out_path, svg_path;
  std::string view = "klein", dump_complex_path, dump_prune_path, format;
  score->add_option("--a", a_path, "First point file")->required();
  score->add_option("--b", b_path, "Second point file (omit for pairwise mode)");
  score->add_option("--model", model, "Input model: lorentz|poincare|klein");
  auto* metrics_opt =
      score->add_option("--metrics", metrics_list, "Comma list: hyperdga,chamfer,wasserstein");
  score->add_option("--format", format, "Force input format: csv|json");
  score->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  score->add_option("--svg", svg_path, "Render the pruned graph to this SVG file");
  score->add_option("--view", view, "SVG view: klein|poincare");
  score->add_option("--dump-complex", dump_complex_path, "Debug dump of the complex (JSON)");
  score->add_option("--dump-prune", dump_prune_path, "Debug dump of the prune report (JSON)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Perturbation sweep on synthetic trees");
  int depth = 7;
  std::vector<double> eps_list{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
  std::vector<std::uint64_t> seeds{1};
  std::string out_dir = "sweep_out";
  double edge_length = 1.0, displacement = 2.5;
  sweep->add_option("--depth", depth, "Tree depth (2..12)");
  sweep->add_option("--eps", eps_list, "Flip probabilities")->delimiter(',');
  sweep->add_option("--seed", seeds, "Seeds, one sweep each")->delimiter(',');
  sweep->add_option("--out-dir", out_dir, "Output directory");
  sweep->add_option("--edge-length", edge_length, "Layout edge length");
  sweep->add_option("--displacement", displacement, "Radial displacement scale");

  // gen-tree
  auto* gen = app.add_subcommand("gen-tree", "Export a synthetic tree dataset as CSV");
  int gen_depth = 5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--depth", gen_depth, "Tree depth (2..12)");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output CSV path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      InputSpec a_spec{a_path, format, model_from_name(model), std::string("A")};
      InputSpec b_spec{b_path, format, model_from_name(model), std::string("B")};
      return run_score(a_spec, b_spec, !b_path.empty(),
                       parse_metrics(metrics_list, metrics_opt->count() > 0), out_path,
                       svg_path, view, dump_complex_path, dump_prune_path);
    }
    if (sweep->parsed())
      return run_sweep(depth, eps_list, seeds, out_dir, edge_length, displacement);
    if (gen->parsed()) {
      const std::string csv = generate_tree(gen_depth, gen_seed).to_csv();
      emit(csv, gen_out);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPoint& e) {
    std::cerr << "invalid point: " << e.what() << "\n";
    return 2;
  } catch (const DuplicateSite& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const EmptyGraph& e) {
    std::cerr << "hyperdga: " << e.what() << "\n";
    return 3;
  } catch (const CardinalityMismatch& e) {
    std::cerr << "wasserstein: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
