#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "cycount/count_heavy.hpp"
#include "cycount/errors.hpp"

#include "oracles.hpp"

using namespace cycount;

namespace {

// Non-colorful stratum totals: copies meeting S exactly k times.
std::vector<std::uint64_t> stratum_totals(const Graph& g, int h, const VertexSet& s) {
  std::vector<std::uint64_t> t(h + 1, 0);
  oracle::for_each_cycle(g, h, [&](const std::vector<int>& ring) {
    int in_s = 0;
    for (int v : ring) in_s += s.contains(v);
    ++t[in_s];
  });
  return t;
}

std::uint64_t oracle_tk_at(const Graph& g, int h, const VertexSet& s, int k, int v) {
  std::uint64_t count = 0;
  oracle::for_each_cycle(g, h, [&](const std::vector<int>& ring) {
    int in_s = 0;
    bool through_v = false;
    for (int u : ring) {
      in_s += s.contains(u);
      through_v |= u == v;
    }
    count += through_v && in_s == k;
  });
  return count;
}

EstimatorConfig tuned(double ell, double reps) {
  EstimatorConfig cfg;
  cfg.scale_mode = ScaleMode::tuned;
  cfg.ell_override = ell;
  cfg.reps_median = reps;
  return cfg;
}

}  // namespace

TEST_CASE("rescaling constant for h = 3 is one half") {
  CHECK(unbias_q(3) == doctest::Approx(0.5));
  CHECK(unbias_q(4) == doctest::Approx(6.0 / 27.0));
}

TEST_CASE("vertex estimator is zero on cycle-free vertices") {
  Graph g(5, Mode::undirected);
  g.add_edge(0, 1);  // pendant edge, no cycle anywhere
  WorkCounter wc;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    CHECK(approx_vertex_tk(g, 3, oracle::all_vertices(g), 3, 0, rng, wc) == 0.0);
  }
}

TEST_CASE("vertex estimator requires v in S and k in range") {
  const Graph g = oracle::complete(4);
  WorkCounter wc;
  Rng rng(1);
  CHECK_THROWS_AS(approx_vertex_tk(g, 3, VertexSet({0, 1}), 3, 3, rng, wc), input_error);
  CHECK_THROWS_AS(approx_vertex_tk(g, 3, VertexSet({0, 1}), 4, 0, rng, wc), input_error);
}

TEST_CASE("vertex estimator is unbiased on a planted triangle") {
  // v on one triangle entirely inside S: t^3(v) = 1.
  Graph g(8, Mode::undirected);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const VertexSet s = oracle::all_vertices(g);
  REQUIRE(oracle_tk_at(g, 3, s, 3, 0) == 1);

  WorkCounter wc;
  const int trials = 20000;
  double sum = 0;
  Rng rng(99);
  for (int i = 0; i < trials; ++i) {
    Rng t_rng = rng.split(i);
    sum += approx_vertex_tk(g, 3, s, 3, 0, t_rng, wc);
  }
  const double mean = sum / trials;
  // One-shot values are 0 or 2, sd = 1; four standard errors of the mean.
  CHECK(std::abs(mean - 1.0) <= 4.0 / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("vertex estimator values are multiples of 1/q bounded by b/q") {
  Rng rng(7);
  const Graph g = oracle::random_graph(10, Mode::undirected, 0.5, rng);
  const VertexSet s = oracle::range_set(0, 6);
  const auto oracle_counts = oracle::cycles(g, 3);
  WorkCounter wc;
  const double q = unbias_q(3);
  for (int trial = 0; trial < 200; ++trial) {
    Rng t_rng = rng.split(trial);
    const int v = s.members[t_rng.uniform_int(s.size())];
    const double y = approx_vertex_tk(g, 3, s, 2, v, t_rng, wc);
    const double scaled = y * q;
    CHECK(scaled == doctest::Approx(std::round(scaled)));
    CHECK(y <= static_cast<double>(oracle_counts.per_vertex[v]) / q + 1e-9);
  }
}

TEST_CASE("set estimator scales by N_k and stays unbiased") {
  // |S| = 6, k = 3: N_k = 2. Two disjoint triangles cover S, so t^3 = 2.
  Graph g(6, Mode::undirected);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  const VertexSet s = oracle::all_vertices(g);
  REQUIRE(stratum_totals(g, 3, s)[3] == 2);

  WorkCounter wc;
  const int trials = 20000;
  double sum = 0;
  Rng rng(123);
  for (int i = 0; i < trials; ++i) {
    Rng t_rng = rng.split(i);
    sum += approx_expected_tk(g, 3, s, 3, t_rng, wc);
  }
  const double mean = sum / trials;
  CHECK(std::abs(mean - 2.0) <= 4.0 * 2.0 / std::sqrt(static_cast<double>(trials)));

  Rng rng2(5);
  CHECK_THROWS_AS(approx_expected_tk(g, 3, VertexSet(), 3, rng2, wc), input_error);
}

TEST_CASE("stratum sums recover the intersecting-copy total") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Rng t_rng = rng.split(trial);
    const Graph g = oracle::random_graph(11, Mode::undirected, 0.45, t_rng);
    std::vector<int> ids;
    for (int v = 0; v < 11; ++v)
      if (t_rng.bernoulli(0.4)) ids.push_back(v);
    const VertexSet s{std::move(ids)};
    const auto strata = stratum_totals(g, 3, s);
    std::uint64_t meeting = 0;
    oracle::for_each_cycle(g, 3, [&](const std::vector<int>& ring) {
      for (int v : ring)
        if (s.contains(v)) {
          ++meeting;
          return;
        }
    });
    CHECK(strata[1] + strata[2] + strata[3] == meeting);
  }
}

TEST_CASE("stratum estimator is exact when the stratum is empty") {
  // S = {v} for a cycle-free v: every estimate equals the true zero.
  Graph g(6, Mode::undirected);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const VertexSet s({0});
  REQUIRE(oracle_tk_at(g, 3, s, 1, 0) == 0);
  const EstimatorConfig cfg = tuned(8, 3);
  WorkCounter wc;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    CHECK(approx_tk(g, 3, s, 1, HeavyBand(1, 4), 1.0, cfg, rng, wc) == 0.0);
  }
}

TEST_CASE("stratum estimator rejects bad delta") {
  const Graph g = oracle::complete(4);
  WorkCounter wc;
  Rng rng(1);
  CHECK_THROWS_AS(
      approx_tk(g, 3, VertexSet({0}), 1, HeavyBand(1, 2), 0.0, tuned(4, 3), rng, wc),
      input_error);
}

TEST_CASE("count over an empty set is zero") {
  const Graph g = oracle::complete(5);
  WorkCounter wc;
  Rng rng(4);
  CHECK(count_heavy(g, 3, VertexSet(), HeavyBand(1, 2), 0.25, tuned(4, 3), rng, wc) == 0.0);
}

TEST_CASE("a single covered triangle is estimated within eps") {
  Graph g(12, Mode::undirected);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const VertexSet s({0, 1, 2});
  const EstimatorConfig cfg = tuned(48, 3);
  WorkCounter wc;
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const double est = count_heavy(g, 3, s, HeavyBand(1, 1), 0.25, cfg, rng, wc);
    hits += est >= 0.75 && est <= 1.25;
  }
  CHECK(hits >= 45);
}

TEST_CASE("the shared-triangle and disjoint-triangle witnesses are distinguished") {
  // Three vertices, each on exactly one triangle; totals 1 vs 3.
  Graph shared(9, Mode::undirected);
  shared.add_edge(0, 1);
  shared.add_edge(1, 2);
  shared.add_edge(2, 0);
  Graph disjoint(9, Mode::undirected);
  for (int c = 0; c < 3; ++c) {
    disjoint.add_edge(3 * c, 3 * c + 1);
    disjoint.add_edge(3 * c + 1, 3 * c + 2);
    disjoint.add_edge(3 * c + 2, 3 * c);
  }
  const VertexSet s_shared({0, 1, 2});
  const VertexSet s_disjoint({0, 3, 6});
  const EstimatorConfig cfg = tuned(64, 5);
  WorkCounter wc;
  int separated = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng r1(seed), r2(seed + 1000);
    const double one = count_heavy(shared, 3, s_shared, HeavyBand(1, 1), 0.25, cfg, r1, wc);
    const double three =
        count_heavy(disjoint, 3, s_disjoint, HeavyBand(1, 1), 0.25, cfg, r2, wc);
    separated += one < 2.0 && three > 2.0;
  }
  CHECK(separated >= 27);
}

TEST_CASE("every product during count_heavy keeps a unit dimension") {
  Rng rng(17);
  const Graph g = oracle::random_graph(20, Mode::undirected, 0.4, rng);
  const VertexSet s = oracle::range_set(0, 8);
  WorkCounter wc;
  Rng run_rng(3);
  count_heavy(g, 3, s, HeavyBand(1, 8), 0.25, tuned(8, 3), run_rng, wc);
  REQUIRE(wc.mm_calls().size() > 0);
  for (const auto& call : wc.mm_calls())
    CHECK(std::min(call.a, std::min(call.b, call.c)) <= 1);
}

TEST_CASE("paper-mode formulas and overrides") {
  EstimatorConfig cfg;
  cfg.scale_mode = ScaleMode::paper;
  CHECK(cfg.Q(1024) == doctest::Approx(8.0 * 10 * 10 * 10 * 10));
  CHECK(cfg.K(1024) == doctest::Approx(100.0 / 16.0));
  CHECK(cfg.reps_median_for(1024) == 4000);
  CHECK(cfg.eps_prime(0.4, 1024) == doctest::Approx(0.01));
  CHECK(cfg.variance_const(3) == doctest::Approx(4.0));

  CHECK(cfg.set_key("q_heaviness", 2.5));
  CHECK(cfg.Q(1024) == doctest::Approx(2.5));
  CHECK_FALSE(cfg.set_key("no_such_knob", 1.0));

  cfg.eps = 0.9;
  CHECK(cfg.clamped_eps() == doctest::Approx(0.5));
  CHECK_THROWS_AS(HeavyBand(0.0, 1.0), input_error);
  CHECK_THROWS_AS(HeavyBand(2.0, 1.0), input_error);
}
