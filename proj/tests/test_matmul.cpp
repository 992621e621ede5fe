#include <doctest.h>

#include <vector>

#include "cycount/errors.hpp"
#include "cycount/matmul.hpp"
#include "cycount/rng.hpp"

#include "oracles.hpp"

using namespace cycount;

namespace {

CountMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  CountMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

// Walk-count DP, the independent route for the adjacency-power check.
std::vector<std::vector<std::uint64_t>> walk_counts(const Graph& g, int len) {
  const int n = g.size();
  std::vector<std::vector<std::uint64_t>> cur(n, std::vector<std::uint64_t>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) cur[u][v] = g.has_edge(u, v) ? 1 : 0;
  for (int step = 1; step < len; ++step) {
    std::vector<std::vector<std::uint64_t>> nxt(n, std::vector<std::uint64_t>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int mid = 0; mid < n; ++mid)
        if (cur[u][mid])
          for (int v = 0; v < n; ++v)
            if (g.has_edge(mid, v)) nxt[u][v] += cur[u][mid];
    cur = std::move(nxt);
  }
  return cur;
}

}  // namespace

TEST_CASE("identity times M is M, with counted work") {
  WorkCounter wc;
  const CountMatrix m = from_rows({{1, 2}, {3, 4}, {5, 6}});
  const CountMatrix r = multiply(CountMatrix::identity(3), m, wc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(r.at(i, j) == m.at(i, j));
  CHECK(wc.scalar_mults() == 3 * 3 * 2);
  REQUIRE(wc.mm_calls().size() == 1);
  CHECK(wc.mm_calls()[0].a == 3);
  CHECK(wc.mm_calls()[0].b == 3);
  CHECK(wc.mm_calls()[0].c == 2);
}

TEST_CASE("1x1 product") {
  WorkCounter wc;
  const CountMatrix r = multiply(from_rows({{3}}), from_rows({{4}}), wc);
  CHECK(r.at(0, 0) == 12);
  CHECK(wc.scalar_mults() == 1);
}

TEST_CASE("cube of a directed 3-cycle has an all-ones diagonal") {
  const Graph g = oracle::directed_cycle(3);
  CountMatrix a(3, 3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (g.has_edge(u, v)) a.set(u, v, 1);
  WorkCounter wc;
  const CountMatrix a3 = multiply(multiply(a, a, wc), a, wc);
  const auto walks = walk_counts(g, 3);
  for (int u = 0; u < 3; ++u) {
    CHECK(a3.at(u, u) == 1);
    for (int v = 0; v < 3; ++v) CHECK(a3.at(u, v) == walks[u][v]);
  }
}

TEST_CASE("powers of random adjacency match the walk oracle") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Rng g_rng = rng.split(trial);
    const Graph g = oracle::random_graph(9, Mode::directed, 0.5, g_rng);
    CountMatrix a(9, 9);
    for (int u = 0; u < 9; ++u)
      for (int v = 0; v < 9; ++v)
        if (g.has_edge(u, v)) a.set(u, v, 1);
    WorkCounter wc;
    CountMatrix p = a;
    for (int len = 2; len <= 4; ++len) {
      p = multiply(p, a, wc);
      const auto walks = walk_counts(g, len);
      for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) CHECK(p.at(u, v) == walks[u][v]);
    }
  }
}

TEST_CASE("multiplication is associative on integer inputs") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Rng t_rng = rng.split(trial);
    auto rand_matrix = [&](int r, int c) {
      CountMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, t_rng.uniform_int(50));
      return m;
    };
    const CountMatrix a = rand_matrix(4, 6), b = rand_matrix(6, 3), c = rand_matrix(3, 5);
    WorkCounter wc;
    const CountMatrix left = multiply(multiply(a, b, wc), c, wc);
    const CountMatrix right = multiply(a, multiply(b, c, wc), wc);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) CHECK(left.at(i, j) == right.at(i, j));
  }
}

TEST_CASE("scalar work equals the sum over logged shapes") {
  Rng rng(5);
  WorkCounter wc;
  CountMatrix acc = CountMatrix::identity(7);
  for (int step = 0; step < 6; ++step) {
    CountMatrix m(7, 7);
    for (int i = 0; i < 7; ++i) m.set(i, rng.uniform_int(7), 1 + rng.uniform_int(3));
    acc = multiply(acc, m, wc);
  }
  std::uint64_t total = 0;
  for (const auto& call : wc.mm_calls())
    total += static_cast<std::uint64_t>(call.a) * call.b * call.c;
  CHECK(total == wc.scalar_mults());
}

TEST_CASE("dimension mismatch is an input error") {
  WorkCounter wc;
  CHECK_THROWS_AS(multiply(CountMatrix(2, 3), CountMatrix(4, 2), wc), input_error);
}

TEST_CASE("wide entries stay exact past 64 bits") {
  WorkCounter wc;
  const std::uint64_t big = 1ull << 63;
  const CountMatrix r = multiply(from_rows({{big}}), from_rows({{4}}), wc);
  CHECK(r.wide());
  CHECK(r.at(0, 0) == static_cast<u128>(big) * 4);
  CHECK_THROWS_AS(r.at_u64(0, 0), overflow_error);
}

TEST_CASE("overflow past 128 bits is a hard error, never silent") {
  WorkCounter wc;
  CountMatrix huge(1, 1);
  huge.set(0, 0, static_cast<u128>(1) << 127);
  CHECK_THROWS_AS(multiply(huge, from_rows({{2}}), wc), overflow_error);
}

TEST_CASE("rebalance inequality holds under the classical cost model") {
  CHECK(rebalance_cost_check(1, 1, 1, 100));
  CHECK(rebalance_cost_check(0.5, 0.5, 0.5, 64));
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const double p1 = 0.01 + 0.99 * rng.uniform();
    const double p2 = 0.01 + 0.99 * rng.uniform();
    const double p3 = 0.01 + 0.99 * rng.uniform();
    CHECK(rebalance_cost_check(p1, p2, p3, 1 + rng.uniform_int(2000)));
  }
  CHECK_THROWS_AS(rebalance_cost_check(0.0, 1, 1, 10), input_error);
}

TEST_CASE("diag_product equals the diagonal of the dense product") {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    Rng t_rng = rng.split(trial);
    CountMatrix p(4, 7), q(7, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 7; ++j) p.set(i, j, t_rng.uniform_int(9));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 4; ++j) q.set(i, j, t_rng.uniform_int(9));
    WorkCounter wc_full, wc_diag;
    const CountMatrix full = multiply(p, q, wc_full);
    const auto diag = diag_product(p, q, wc_diag);
    for (int i = 0; i < 4; ++i) CHECK(diag[i] == full.at(i, i));
    CHECK(wc_diag.scalar_mults() == 4 * 7);
    REQUIRE(wc_diag.mm_calls().size() == 1);
    CHECK(wc_diag.mm_calls()[0].c == 1);
  }
}
