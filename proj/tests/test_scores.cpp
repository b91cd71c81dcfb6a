#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperdga/errors.hpp"
#include "hyperdga/pipeline.hpp"
#include "hyperdga/scores.hpp"
#include "oracles.hpp"

using namespace hyperdga;

TEST_CASE("edge-count identities") {
  DelaunayComplex c;
  c.dimension = 2;
  c.edges = {{0, 1, true}, {0, 2, true}, {1, 2, true}, {1, 3, false}, {2, 3, true}};
  SUBCASE("every kept edge heterogeneous") {
    const std::vector<int> labels{0, 1, 0, 1};  // 0-1,0-2? 0-2 is homogeneous...
    const std::vector<int> all_het{0, 1, 1, 0};
    const EdgeCounts n = count_edges(c, all_het);
    // kept edges: (0,1),(0,2),(1,2),(2,3) with labels 0-1,0-1,1-1? recompute:
    // labels {0,1,1,0}: (0,1) het, (0,2) het, (1,2) homo, (2,3) het.
    CHECK(n.total == 4);
    CHECK(n.heterogeneous == 3);
    CHECK(hyperdga_score(n) == doctest::Approx(0.25));
  }
  SUBCASE("no heterogeneous edge gives 1") {
    const EdgeCounts n = count_edges(c, {0, 0, 0, 0});
    CHECK(n.heterogeneous == 0);
    CHECK(hyperdga_score(n) == 1.0);
  }
  SUBCASE("all heterogeneous gives 0") {
    DelaunayComplex bipartite;
    bipartite.dimension = 2;
    bipartite.edges = {{0, 1, true}, {2, 3, true}};
    const EdgeCounts n = count_edges(bipartite, {0, 1, 0, 1});
    CHECK(n.heterogeneous == n.total);
    CHECK(hyperdga_score(n) == 0.0);
  }
  SUBCASE("no kept edges raises") {
    DelaunayComplex empty;
    empty.edges = {{0, 1, false}};
    CHECK_THROWS_AS(count_edges(empty, {0, 1}), EmptyGraph);
  }
}

TEST_CASE("chamfer basics and oracle") {
  std::vector<Vec> a{{0.1, 0.2}, {-0.3, 0.0}, {0.0, 0.5}};
  CHECK(chamfer(a, a) == 0.0);

  // Single pair: both directions see the same unit geodesic distance.
  std::vector<Vec> o{{0.0, 0.0}};
  std::vector<Vec> t{{std::tanh(1.0), 0.0}};
  CHECK(chamfer(o, t) == doctest::Approx(2.0).epsilon(1e-12));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> x, y;
    for (int i = 0; i < 6; ++i) {
      x.push_back(oracles::random_ball_point(rng, 2, 0.9));
      y.push_back(oracles::random_ball_point(rng, 2, 0.9));
    }
    double expect = 0.0;
    for (const Vec& p : x) {
      double best = 1e300;
      for (const Vec& q : y) best = std::min(best, klein_distance(p, q));
      expect += best * best;
    }
    for (const Vec& q : y) {
      double best = 1e300;
      for (const Vec& p : x) best = std::min(best, klein_distance(p, q));
      expect += best * best;
    }
    CHECK(chamfer(x, y) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(chamfer(x, y) == chamfer(y, x));
  }
  CHECK_THROWS_AS(chamfer({}, a), EmptyInput);
}

TEST_CASE("wasserstein matches exhaustive matching") {
  std::vector<Vec> a{{0.1, 0.2}, {-0.3, 0.0}};
  CHECK(wasserstein(a, a) == 0.0);

  SUBCASE("two-point case checks both matchings") {
    std::vector<Vec> x{{0.0, 0.0}, {0.5, 0.0}};
    std::vector<Vec> y{{0.1, 0.1}, {-0.4, 0.2}};
    const double direct = klein_distance(x[0], y[0]) + klein_distance(x[1], y[1]);
    const double crossed = klein_distance(x[0], y[1]) + klein_distance(x[1], y[0]);
    CHECK(wasserstein(x, y) == doctest::Approx(std::min(direct, crossed)).epsilon(1e-14));
  }

  SUBCASE("random sets of seven against 5040 permutations") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> x, y;
      for (int i = 0; i < 7; ++i) {
        x.push_back(oracles::random_ball_point(rng, 2, 0.9));
        y.push_back(oracles::random_ball_point(rng, 2, 0.9));
      }
      CHECK(std::abs(wasserstein(x, y) - oracles::wasserstein_bruteforce(x, y)) < 1e-10);
    }
  }

  SUBCASE("argument order does not change the bits") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> x, y;
      for (int i = 0; i < 5; ++i) {
        x.push_back(oracles::random_ball_point(rng, 2, 0.9));
        y.push_back(oracles::random_ball_point(rng, 2, 0.9));
      }
      CHECK(wasserstein(x, y) == wasserstein(y, x));
      CHECK(chamfer(x, y) == chamfer(y, x));
    }
  }

  CHECK_THROWS_AS(wasserstein(a, {{0.0, 0.0}}), CardinalityMismatch);
}

TEST_CASE("metrics are isometry-invariant under model conversion") {
  std::mt19937_64 rng(73);
  std::vector<Vec> pa, pb, ka, kb;
  for (int i = 0; i < 6; ++i) {
    pa.push_back(oracles::random_ball_point(rng, 2, 0.9));
    pb.push_back(oracles::random_ball_point(rng, 2, 0.9));
    ka.push_back(poincare_to_klein({Model::Poincare, pa.back()}).coords);
    kb.push_back(poincare_to_klein({Model::Poincare, pb.back()}).coords);
  }
  // Chamfer in converted coordinates equals chamfer evaluated with the
  // native Poincare distance.
  double expect = 0.0;
  for (const Vec& p : pa) {
    double best = 1e300;
    for (const Vec& q : pb) best = std::min(best, poincare_distance(p, q));
    expect += best * best;
  }
  for (const Vec& q : pb) {
    double best = 1e300;
    for (const Vec& p : pa) best = std::min(best, poincare_distance(p, q));
    expect += best * best;
  }
  CHECK(chamfer(ka, kb) == doctest::Approx(expect).epsilon(1e-8));

  double expect_w = 0.0;
  {
    std::vector<std::vector<double>> cost(6, std::vector<double>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) cost[i][j] = poincare_distance(pa[i], pb[j]);
    // Exhaustive over 720 permutations.
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    expect_w = 1e300;
    do {
      double s = 0.0;
      for (int i = 0; i < 6; ++i) s += cost[i][perm[i]];
      expect_w = std::min(expect_w, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK(wasserstein(ka, kb) == doctest::Approx(expect_w).epsilon(1e-8));
}

TEST_CASE("separation trend for two clusters") {
  // A fixed cluster near the origin against a copy pushed radially out:
  // chamfer and wasserstein never decrease, and far separation drives the
  // edge score toward 1.
  std::mt19937_64 rng(79);
  std::vector<Vec> base;
  for (int i = 0; i < 8; ++i) base.push_back(oracles::random_ball_point(rng, 2, 0.25));
  // Hyperbolic translation along the x axis by `shift`, via the Poincare
  // model's Mobius addition with u = tanh(shift/2) e_x.
  auto translated = [](const Vec& klein, double shift) {
    const Vec pp = klein_to_poincare({Model::Klein, klein}).coords;
    const Vec u{std::tanh(shift / 2.0), 0.0};
    const double uv = dot(u, pp), uu = norm2(u), vv = norm2(pp);
    const double denom = 1.0 + 2.0 * uv + uu * vv;
    const Vec mob{((1.0 + 2.0 * uv + vv) * u[0] + (1.0 - uu) * pp[0]) / denom,
                  ((1.0 + 2.0 * uv + vv) * u[1] + (1.0 - uu) * pp[1]) / denom};
    return poincare_to_klein({Model::Poincare, mob}).coords;
  };
  double prev_c = -1.0, prev_w = -1.0;
  double last_dga = 0.0;
  for (double shift = 0.25; shift < 2.75; shift += 0.25) {
    std::vector<Vec> moved;
    for (const Vec& p : base) moved.push_back(translated(p, shift));
    const double c = chamfer(base, moved);
    const double w = wasserstein(base, moved);
    CHECK(c >= prev_c - 1e-9);
    CHECK(w >= prev_w - 1e-9);
    prev_c = c;
    prev_w = w;
    const PipelineResult r = score_sets(base, moved);
    last_dga = *r.report.hyperdga;
  }
  CHECK(last_dga > 0.8);
}
