#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hyperdga/errors.hpp"
#include "hyperdga/power_delaunay.hpp"
#include "oracles.hpp"

using namespace hyperdga;

namespace {

std::vector<PowerSite> make_sites(const std::vector<Vec>& centers,
                                  const std::vector<double>& weights) {
  std::vector<PowerSite> out;
  for (std::size_t i = 0; i < centers.size(); ++i)
    out.push_back({centers[i], weights[i], static_cast<int>(i)});
  return out;
}

std::set<std::pair<int, int>> edge_set(const DelaunayComplex& c) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : c.edges) out.emplace(e.a, e.b);
  return out;
}

std::set<std::vector<int>> simplex_set(const DelaunayComplex& c) {
  std::set<std::vector<int>> out;
  for (const auto& s : c.simplices) out.insert(s.vertices);
  return out;
}

}  // namespace

TEST_CASE("site map evaluates the weight formula") {
  const PowerSite origin = klein_to_power_site({0.0, 0.0});
  CHECK(origin.center == Vec{0.0, 0.0});
  CHECK(origin.squared_weight == -1.0);

  const PowerSite s = klein_to_power_site({0.6, 0.0});
  CHECK(s.center[0] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(s.center[1] == 0.0);
  CHECK(s.squared_weight == doctest::Approx(-1.109375).epsilon(1e-14));

  CHECK_THROWS_AS(klein_to_power_site({1.0 - 1e-12, 0.0}), InvalidPoint);
}

TEST_CASE("squared weights are negative below the crossover radius") {
  // The weight changes sign where |p|^2 sqrt(1-|p|^2) = 4 (1-|p|^2), i.e.
  // at sqrt(1-|p|^2) = sqrt(5) - 2; everything nearer the origin is
  // negative. Swept numerically and checked against that root.
  const double u = std::sqrt(5.0) - 2.0;
  const double crossover = std::sqrt(1.0 - u * u);
  int sign_changes = 0;
  double prev = klein_to_power_site({0.0, 0.0}).squared_weight;
  for (int i = 1; i <= 4000; ++i) {
    const double r = (1.0 - 1e-8) * i / 4000.0;
    const double w = klein_to_power_site({r, 0.0}, -1, 1e-9).squared_weight;
    if ((prev < 0.0) != (w < 0.0)) {
      ++sign_changes;
      CHECK(r == doctest::Approx(crossover).epsilon(1e-3));
    }
    if (r < crossover - 1e-3) CHECK(w < 0.0);
    prev = w;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("equilateral triangle with zero weights") {
  const double h = std::sqrt(3.0) / 2.0;
  auto c = regular_triangulation(make_sites({{0, 0}, {1, 0}, {0.5, h}}, {0, 0, 0}));
  REQUIRE(c.simplices.size() == 1);
  CHECK(c.edges.size() == 3);
  // Circumcenter of an equilateral triangle is its centroid.
  CHECK(c.simplices[0].dual_vertex[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.simplices[0].dual_vertex[1] == doctest::Approx(h / 3.0).epsilon(1e-9));
}

TEST_CASE("cocircular square resolves to one deterministic diagonal") {
  auto c = regular_triangulation(make_sites({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0, 0, 0}));
  REQUIRE(c.simplices.size() == 2);
  CHECK(c.edges.size() == 5);
  // The perturbation grows weights by seniority, so the lowest-index corner
  // takes the diagonal: triangles {0,1,3} and {0,2,3}.
  CHECK(simplex_set(c) == std::set<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
  CHECK(c.find_edge(0, 3) >= 0);
  CHECK(c.find_edge(1, 2) == -1);
  // Both dual vertices collapse onto the circumcenter of the square.
  for (const auto& s : c.simplices) {
    CHECK(s.dual_vertex[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.dual_vertex[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("collinear sites are rejected") {
  CHECK_THROWS_AS(
      regular_triangulation(make_sites({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {0, 0, 0, 0})),
      DegenerateInput);
  CHECK_THROWS_AS(regular_triangulation(make_sites({{0, 0}, {1, 0}}, {0, 0})),
                  DegenerateInput);
}

TEST_CASE("duplicate centers are rejected with indices") {
  try {
    regular_triangulation(
        make_sites({{0, 0}, {1, 0}, {0, 1}, {1, 0}}, {0, 0, 0, -1}));
    FAIL("expected DuplicateSite");
  } catch (const DuplicateSite& e) {
    const std::string msg = e.what();
    CHECK(msg.find("1") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }
}

TEST_CASE("hidden site appears in no simplex") {
  // A heavily negative weight empties the central cell.
  auto c = regular_triangulation(
      make_sites({{-1, 0}, {1, 0}, {0, 1.5}, {0, 0.5}}, {0, 0, 0, -100}));
  CHECK(c.simplices.size() == 1);
  CHECK(simplex_set(c) == std::set<std::vector<int>>{{0, 1, 2}});
  CHECK(c.find_edge(0, 3) == -1);
  CHECK(static_cast<int>(c.sites.size()) == 4);  // still listed as a vertex
}

TEST_CASE("zero weights reproduce the Delaunay triangulation (2-D)") {
  std::mt19937_64 rng(101);
  int done = 0;
  while (done < 40) {
    const int N = 4 + static_cast<int>(rng() % 9);
    std::vector<Vec> pts;
    for (int i = 0; i < N; ++i) pts.push_back(oracles::random_ball_point(rng, 2, 2.0));
    bool ambiguous = false;
    const auto expect = oracles::delaunay_simplices_bruteforce(pts, 1e-9, &ambiguous);
    if (ambiguous) continue;
    auto c = regular_triangulation(make_sites(pts, std::vector<double>(N, 0.0)));
    CHECK(simplex_set(c) ==
          std::set<std::vector<int>>(expect.begin(), expect.end()));
    CHECK(edge_set(c) == oracles::edges_of_simplices(expect));
    ++done;
  }
}

TEST_CASE("zero weights reproduce the Delaunay tessellation (3-D)") {
  std::mt19937_64 rng(202);
  int done = 0;
  while (done < 10) {
    const int N = 5 + static_cast<int>(rng() % 6);
    std::vector<Vec> pts;
    for (int i = 0; i < N; ++i) pts.push_back(oracles::random_ball_point(rng, 3, 2.0));
    bool ambiguous = false;
    const auto expect = oracles::delaunay_simplices_bruteforce(pts, 1e-9, &ambiguous);
    if (ambiguous) continue;
    auto c = regular_triangulation(make_sites(pts, std::vector<double>(N, 0.0)));
    CHECK(simplex_set(c) ==
          std::set<std::vector<int>>(expect.begin(), expect.end()));
    ++done;
  }
}

TEST_CASE("lifting correctness: simplices are exactly the empty-power-sphere sets") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 5 + static_cast<int>(rng() % 7);
    std::vector<Vec> pts;
    std::vector<double> ws;
    for (int i = 0; i < N; ++i) {
      pts.push_back(oracles::random_ball_point(rng, 2, 2.0));
      ws.push_back(-2.0 * oracles::unit_double(rng));
    }
    const auto sites = make_sites(pts, ws);
    DelaunayComplex c;
    try {
      c = regular_triangulation(sites);
    } catch (const DegenerateInput&) {
      continue;
    }
    for (const auto& s : c.simplices) {
      // The dual vertex has equal power distance to its generators and no
      // smaller power distance to anyone else (up to rounding).
      const Vec& x = s.dual_vertex;
      const double pref =
          dist2(x, sites[s.vertices[0]].center) - sites[s.vertices[0]].squared_weight;
      for (int v : s.vertices) {
        CHECK(dist2(x, sites[v].center) - sites[v].squared_weight ==
              doctest::Approx(pref).epsilon(1e-6));
      }
      for (int q = 0; q < N; ++q) {
        if (std::find(s.vertices.begin(), s.vertices.end(), q) != s.vertices.end())
          continue;
        CHECK(dist2(x, sites[q].center) - sites[q].squared_weight >= pref - 1e-6);
      }
    }
  }
}

TEST_CASE("translation equivariance of the zero-weight complex") {
  std::mt19937_64 rng(404);
  std::vector<Vec> pts;
  for (int i = 0; i < 9; ++i) pts.push_back(oracles::random_ball_point(rng, 2, 1.5));
  auto c0 = regular_triangulation(make_sites(pts, std::vector<double>(9, 0.0)));
  const Vec shift{10.0, -3.0};
  std::vector<Vec> moved = pts;
  for (Vec& p : moved) p = add(p, shift);
  auto c1 = regular_triangulation(make_sites(moved, std::vector<double>(9, 0.0)));
  REQUIRE(simplex_set(c0).size() == simplex_set(c1).size());
  CHECK(edge_set(c0) == edge_set(c1));
  for (std::size_t i = 0; i < c0.simplices.size(); ++i) {
    CHECK(c1.simplices[i].dual_vertex[0] ==
          doctest::Approx(c0.simplices[i].dual_vertex[0] + shift[0]).epsilon(1e-9));
    CHECK(c1.simplices[i].dual_vertex[1] ==
          doctest::Approx(c0.simplices[i].dual_vertex[1] + shift[1]).epsilon(1e-9));
  }
}

TEST_CASE("every simplex edge is present (closure under faces)") {
  std::mt19937_64 rng(505);
  std::vector<Vec> pts;
  for (int i = 0; i < 12; ++i) pts.push_back(oracles::random_ball_point(rng, 2, 1.0));
  std::vector<double> ws(12);
  for (double& w : ws) w = -2.0 * oracles::unit_double(rng);
  auto c = regular_triangulation(make_sites(pts, ws));
  for (const auto& s : c.simplices)
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
        CHECK(c.find_edge(s.vertices[i], s.vertices[j]) >= 0);
}

TEST_CASE("edge set matches grid-sampled power adjacency") {
  std::mt19937_64 rng(606);
  int done = 0;
  while (done < 8) {
    const int N = 5 + static_cast<int>(rng() % 6);
    std::vector<Vec> pts;
    std::vector<double> ws;
    for (int i = 0; i < N; ++i) {
      pts.push_back(oracles::random_ball_point(rng, 2, 2.0));
      ws.push_back(-2.0 * oracles::unit_double(rng));
    }
    const auto sites = make_sites(pts, ws);
    DelaunayComplex c;
    try {
      c = regular_triangulation(sites);
    } catch (const DegenerateInput&) {
      continue;
    }
    Vec lo{1e30, 1e30}, hi{-1e30, -1e30};
    for (const Vec& p : pts) {
      lo[0] = std::min(lo[0], p[0]);
      lo[1] = std::min(lo[1], p[1]);
      hi[0] = std::max(hi[0], p[0]);
      hi[1] = std::max(hi[1], p[1]);
    }
    const double span = std::max(hi[0] - lo[0], hi[1] - lo[1]);
    const Vec mid{0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])};
    const double half = 0.75 * span + 0.5;
    const Vec blo{mid[0] - half, mid[1] - half};
    const Vec bhi{mid[0] + half, mid[1] + half};
    const int cells = 500;
    const double step = 2.0 * half / cells;
    const auto grid = oracles::power_grid_adjacency(sites, blo, bhi, cells);

    const auto ours = edge_set(c);
    for (const auto& e : ours) {
      if (grid.pairs.count(e)) continue;
      const DualFace face = dual_face_of_edge(c, c.find_edge(e.first, e.second));
      CHECK(oracles::power_edge_ambiguous(sites, e.first, e.second, face, blo, bhi, step));
    }
    for (std::size_t w = 0; w < grid.order.size(); ++w) {
      const auto& e = grid.order[w];
      if (ours.count(e)) continue;
      CHECK(oracles::power_witness_ambiguous(sites, e.first, e.second, grid.witness[w],
                                             step));
    }
    ++done;
  }
}

TEST_CASE("dual faces track the sampled cell boundary (Hausdorff-style)") {
  std::mt19937_64 rng(707);
  std::vector<Vec> pts;
  std::vector<double> ws;
  for (int i = 0; i < 10; ++i) {
    pts.push_back(oracles::random_ball_point(rng, 2, 2.0));
    ws.push_back(-2.0 * oracles::unit_double(rng));
  }
  const auto sites = make_sites(pts, ws);
  const auto c = regular_triangulation(sites);
  const Vec blo{-3.5, -3.5}, bhi{3.5, 3.5};
  const int cells = 700;
  const double step = 7.0 / cells;

  auto dist_to_face = [&](const DualFace& f, const Vec& z) {
    double best = 1e300;
    for (const Vec& v : f.vertices) best = std::min(best, norm(sub(z, v)));
    for (std::size_t i = 0; i + 1 < f.vertices.size(); ++i) {
      const Vec d = sub(f.vertices[i + 1], f.vertices[i]);
      const double t =
          std::clamp(dot(sub(z, f.vertices[i]), d) / std::max(norm2(d), 1e-30), 0.0, 1.0);
      best = std::min(best, norm(sub(z, add(f.vertices[i], scaled(d, t)))));
    }
    for (const Vec& v : f.vertices)
      for (const Vec& r : f.rays) {
        const double t = std::max(0.0, dot(sub(z, v), r) / norm2(r));
        best = std::min(best, norm(sub(z, add(v, scaled(r, t)))));
      }
    return best;
  };

  for (int ei = 0; ei < static_cast<int>(c.edges.size()); ++ei) {
    const auto& e = c.edges[ei];
    const DualFace face = dual_face_of_edge(c, ei);
    const auto boundary =
        oracles::power_pair_boundary(sites, e.a, e.b, blo, bhi, cells);
    // Sampled boundary points lie on the face, up to grid resolution and
    // corner ties.
    for (const Vec& z : boundary) {
      if (oracles::power_witness_ambiguous(sites, e.a, e.b, z, step)) continue;
      CHECK(dist_to_face(face, z) <= 3.0 * step);
    }
    // And conversely, unambiguous stretches of the face are seen by the grid.
    auto face_points = [&]() {
      std::vector<Vec> out;
      auto add_segment = [&](const Vec& p, const Vec& q) {
        const int steps = std::max(1, static_cast<int>(norm(sub(q, p)) / step));
        for (int t = 0; t <= steps; ++t) {
          Vec z = add(p, scaled(sub(q, p), double(t) / steps));
          if (z[0] > blo[0] + 2 * step && z[0] < bhi[0] - 2 * step &&
              z[1] > blo[1] + 2 * step && z[1] < bhi[1] - 2 * step)
            out.push_back(std::move(z));
        }
      };
      for (std::size_t i = 0; i + 1 < face.vertices.size(); ++i)
        add_segment(face.vertices[i], face.vertices[i + 1]);
      for (const Vec& v : face.vertices)
        for (const Vec& r : face.rays) add_segment(v, add(v, scaled(r, 14.0)));
      if (face.vertices.size() == 1 && face.rays.empty())
        add_segment(face.vertices[0], face.vertices[0]);
      return out;
    }();
    for (const Vec& z : face_points) {
      if (oracles::power_witness_ambiguous(sites, e.a, e.b, z, step)) continue;
      double best = 1e300;
      for (const Vec& w : boundary) best = std::min(best, norm(sub(z, w)));
      CHECK(best <= 3.0 * step);
    }
  }
}

TEST_CASE("dual faces of the two-triangle square") {
  auto c = regular_triangulation(make_sites({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0, 0, 0}));
  const int diag = c.find_edge(0, 3);
  REQUIRE(diag >= 0);
  const DualFace inner = dual_face_of_edge(c, diag);
  CHECK(inner.vertices.size() == 2);
  CHECK(inner.rays.empty());

  const int hull_edge = c.find_edge(0, 1);
  const DualFace outer = dual_face_of_edge(c, hull_edge);
  CHECK(outer.vertices.size() == 1);
  REQUIRE(outer.rays.size() == 1);
  // Outward perpendicular of the bottom edge points down.
  CHECK(outer.rays[0][0] == doctest::Approx(0.0));
  CHECK(outer.rays[0][1] == doctest::Approx(-1.0));
}
