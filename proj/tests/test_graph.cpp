#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cycount/errors.hpp"
#include "cycount/exact.hpp"
#include "cycount/graph.hpp"

#include "oracles.hpp"

using namespace cycount;

TEST_CASE("induced subgraph drops cycles with removed vertices") {
  const Graph k3 = oracle::complete(3);
  const Graph sub = induced_subgraph(k3, VertexSet({0, 1}));
  CHECK(sub.size() == 2);
  CHECK(sub.has_edge(0, 1));
  CHECK(oracle::cycles(sub, 3).total == 0);
}

TEST_CASE("induced subgraph with the full vertex set is the identity") {
  Rng rng(7);
  const Graph g = oracle::random_graph(9, Mode::directed, 0.4, rng);
  const Graph same = induced_subgraph(g, oracle::all_vertices(g));
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v)
      CHECK(same.has_edge(u, v) == g.has_edge(u, v));
}

TEST_CASE("induced subgraph of a directed 4-cycle keeps the path only") {
  Graph g(4, Mode::directed);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  const Graph sub = induced_subgraph(g, VertexSet({0, 1, 2}));
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.has_edge(1, 2));
  CHECK_FALSE(sub.has_edge(2, 0));
  CHECK(oracle::cycles(sub, 3).total == 0);
}

TEST_CASE("induced subgraph rejects out-of-range ids") {
  const Graph k3 = oracle::complete(3);
  CHECK_THROWS_AS(induced_subgraph(k3, VertexSet({0, 5})), input_error);
}

TEST_CASE("nested induced subgraphs compose through labels") {
  Rng rng(11);
  const Graph g = oracle::random_graph(10, Mode::undirected, 0.5, rng);
  const Graph a = induced_subgraph(g, VertexSet({0, 2, 3, 5, 7, 8}));
  const Graph b = induced_subgraph(a, VertexSet({1, 2, 4}));  // g-ids 2,3,7
  const Graph direct = induced_subgraph(g, VertexSet({2, 3, 7}));
  REQUIRE(b.size() == direct.size());
  for (int i = 0; i < b.size(); ++i) CHECK(b.label_of(i) == direct.label_of(i));
  for (int u = 0; u < b.size(); ++u)
    for (int v = 0; v < b.size(); ++v)
      CHECK(b.has_edge(u, v) == direct.has_edge(u, v));
}

TEST_CASE("bernoulli sample at the extremes") {
  Rng rng(3);
  const Graph g = oracle::complete(6);
  CHECK(bernoulli_sample(g, 1.0, rng).size() == 6);
  CHECK(bernoulli_sample(g, 0.0, rng).size() == 0);
  CHECK_THROWS_AS(bernoulli_sample(g, 1.5, rng), input_error);
}

TEST_CASE("bernoulli sample concentrates on isolated vertices") {
  // Binomial(1000, 1/2): P(|X-500| > 100) < 4e-9, so every seed lands inside.
  const Graph g(1000, Mode::undirected);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int kept = bernoulli_sample(g, 0.5, rng).size();
    CHECK(kept >= 400);
    CHECK(kept <= 600);
  }
}

TEST_CASE("random coloring basics") {
  Rng rng(5);
  const Coloring mono = random_coloring(12, 1, rng);
  for (int v = 0; v < 12; ++v) CHECK(mono.color[v] == 0);

  Rng a(42), b(42);
  const Coloring c1 = random_coloring(50, 4, a);
  const Coloring c2 = random_coloring(50, 4, b);
  CHECK(c1.color == c2.color);
}

TEST_CASE("random coloring class sizes concentrate") {
  const int n = 10000;
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Coloring c = random_coloring(n, 4, rng);
    std::vector<int> sizes(4, 0);
    for (int v = 0; v < n; ++v) ++sizes[c.color[v]];
    bool ok = true;
    for (int s : sizes) ok &= std::abs(s - n / 4) <= 4 * sigma;
    good += ok;
  }
  CHECK(good >= 99);
}

TEST_CASE("layered graph of a monochromatic graph is edgeless") {
  const Graph g = oracle::complete(5);
  const Coloring mono(std::vector<int>(5, 0), 3);
  CHECK(layered_graph(g, mono).edge_count() == 0);
}

TEST_CASE("layered graph keeps a cyclically colored directed triangle") {
  const Graph g = oracle::directed_cycle(3);
  const Coloring phi({0, 1, 2}, 3);
  const Graph lay = layered_graph(g, phi);
  CHECK(lay.has_edge(0, 1));
  CHECK(lay.has_edge(1, 2));
  CHECK(lay.has_edge(2, 0));
}

TEST_CASE("layered graph matches the edge rule on K4") {
  const Graph g = oracle::complete(4);
  const Coloring phi({0, 1, 2, 2}, 3);
  const Graph lay = layered_graph(g, phi);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      const bool expect = u != v && g.has_edge(u, v) &&
                          phi.color[v] == (phi.color[u] + 1) % 3;
      CHECK(lay.has_edge(u, v) == expect);
    }
}

TEST_CASE("layered graph is partite with no intra-class edges") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Rng g_rng = rng.split(trial);
    const Graph g = oracle::random_graph(14, Mode::undirected, 0.4, g_rng);
    const Coloring phi = random_coloring(14, 4, g_rng);
    const Graph lay = layered_graph(g, phi);
    for (int u = 0; u < 14; ++u)
      for (int v = 0; v < 14; ++v)
        if (u != v && lay.has_edge(u, v))
          CHECK(phi.color[v] == (phi.color[u] + 1) % 4);
  }
}

TEST_CASE("per-vertex layered cycle count never exceeds the colorful count") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Rng g_rng = rng.split(trial);
    const Graph g = oracle::random_graph(12, Mode::undirected, 0.45, g_rng);
    const Coloring phi = random_coloring(12, 3, g_rng);
    const Graph lay = layered_graph(g, phi);
    const auto layered = oracle::cycles(lay, 3);
    const auto colorful = oracle::colorful_k(g, phi, oracle::all_vertices(g), 3);
    for (int v = 0; v < 12; ++v) CHECK(layered.per_vertex[v] <= colorful.per_vertex[v]);
  }
}

TEST_CASE("graph file round trip and format errors") {
  Rng rng(31);
  const Graph g = oracle::random_graph(11, Mode::undirected, 0.4, rng);
  std::stringstream ss;
  write_graph(g, ss);
  const Graph back = read_graph(ss);
  REQUIRE(back.size() == g.size());
  CHECK(back.mode() == g.mode());
  for (int u = 0; u < 11; ++u)
    for (int v = 0; v < 11; ++v) CHECK(back.has_edge(u, v) == g.has_edge(u, v));

  std::stringstream bad1("5 sideways\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad1), input_error);
  std::stringstream bad2("3 directed\n0 7\n");
  CHECK_THROWS_AS(read_graph(bad2), input_error);
}

TEST_CASE("self loops and duplicate labels are rejected") {
  Graph g(4, Mode::directed);
  CHECK_THROWS_AS(g.add_edge(2, 2), input_error);
  CHECK_THROWS_AS(g.set_labels({1, 1, 2, 3}), input_error);
}
