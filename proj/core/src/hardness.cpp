#include "cycount/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cycount/errors.hpp"

namespace cycount {

namespace {

void check_pairs(const std::vector<std::pair<int, int>>& pairs, int nx, int ny,
                 const char* what) {
  for (auto [x, y] : pairs)
    if (x < 0 || y < 0 || x >= nx || y >= ny)
      throw input_error(std::string(what) + ": endpoint out of range");
}

void validate(const TripartiteSpec& s) {
  if (s.na < 0 || s.nb < 0 || s.nc < 0) throw input_error("tripartite: negative part size");
  check_pairs(s.ab, s.na, s.nb, "tripartite ab");
  check_pairs(s.bc, s.nb, s.nc, "tripartite bc");
  check_pairs(s.ca, s.nc, s.na, "tripartite ca");
}

// Shuffled identity permutation, so planted structure is not id-correlated.
std::vector<int> shuffled_ids(int n, Rng& rng) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(ids[i], ids[rng.uniform_int(i + 1)]);
  return ids;
}

}  // namespace

TripartiteSpec random_tripartite(int na, int nb, int nc, double edge_p, Rng& rng) {
  TripartiteSpec s;
  s.na = na;
  s.nb = nb;
  s.nc = nc;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      if (rng.bernoulli(edge_p)) s.ab.emplace_back(a, b);
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nc; ++c)
      if (rng.bernoulli(edge_p)) s.bc.emplace_back(b, c);
  for (int c = 0; c < nc; ++c)
    for (int a = 0; a < na; ++a)
      if (rng.bernoulli(edge_p)) s.ca.emplace_back(c, a);
  return s;
}

Graph tripartite_graph(const TripartiteSpec& s, Mode mode) {
  validate(s);
  Graph g(s.na + s.nb + s.nc, mode);
  const int boff = s.na, coff = s.na + s.nb;
  for (auto [a, b] : s.ab) g.add_edge(a, boff + b);
  for (auto [b, c] : s.bc) g.add_edge(boff + b, coff + c);
  for (auto [c, a] : s.ca) g.add_edge(coff + c, a);
  return g;
}

Graph triangle_gap_blowup(const TripartiteSpec& s, int t) {
  validate(s);
  if (t < 1) throw input_error("triangle_gap_blowup: t must be >= 1");
  Graph g(s.na + s.nb * t + s.nc, Mode::undirected);
  const int boff = s.na, coff = s.na + s.nb * t;
  auto bcopy = [&](int b, int i) { return boff + b * t + i; };
  for (auto [c, a] : s.ca) g.add_edge(coff + c, a);
  for (auto [a, b] : s.ab)
    for (int i = 0; i < t; ++i) g.add_edge(a, bcopy(b, i));
  for (auto [b, c] : s.bc)
    for (int i = 0; i < t; ++i) g.add_edge(bcopy(b, i), coff + c);
  return g;
}

LayeringResult hcycle_gap_layering(const TripartiteSpec& s, int h, std::int64_t t,
                                   Mode mode) {
  validate(s);
  if (h < 3) throw input_error("hcycle_gap_layering: h must be >= 3");
  if (t < 1) throw input_error("hcycle_gap_layering: t must be >= 1");
  if (mode == Mode::undirected && h % 2 == 0)
    throw input_error(
        "hcycle_gap_layering: undirected layering needs odd h; an even-h "
        "layered graph is bipartite between consecutive layers and the gap "
        "collapses");

  const int layers = h - 2;
  const auto ell = static_cast<std::int64_t>(
      std::ceil(std::pow(static_cast<double>(t), 1.0 / layers) - 1e-9));
  std::int64_t realized = 1;
  for (int i = 0; i < layers; ++i) realized *= ell;

  const std::int64_t nb_total = static_cast<std::int64_t>(s.nb) * ell * layers;
  Graph g(static_cast<int>(s.na + nb_total + s.nc), mode);
  const int boff = s.na;
  const int coff = static_cast<int>(s.na + nb_total);
  auto bvert = [&](int b, std::int64_t i, int layer) {
    return static_cast<int>(boff + static_cast<std::int64_t>(layer) * s.nb * ell +
                            static_cast<std::int64_t>(b) * ell + i);
  };

  for (auto [c, a] : s.ca) g.add_edge(coff + c, a);
  for (auto [a, b] : s.ab)
    for (std::int64_t i = 0; i < ell; ++i) g.add_edge(a, bvert(b, i, 0));
  for (auto [b, c] : s.bc)
    for (std::int64_t i = 0; i < ell; ++i) g.add_edge(bvert(b, i, layers - 1), coff + c);
  for (int b = 0; b < s.nb; ++b)
    for (int layer = 0; layer + 1 < layers; ++layer)
      for (std::int64_t i = 0; i < ell; ++i)
        for (std::int64_t j = 0; j < ell; ++j)
          g.add_edge(bvert(b, i, layer), bvert(b, j, layer + 1));

  return LayeringResult{std::move(g), ell, realized};
}

std::pair<Graph, GroundTruth> plant_instance(const PlantSpec& spec, Rng& rng) {
  if (spec.h < 3) throw input_error("plant_instance: h must be >= 3");
  if (spec.n < 1) throw input_error("plant_instance: n must be positive");
  const int n = spec.n, h = spec.h;

  Graph g(n, spec.mode);
  GroundTruth truth;
  std::int64_t expected = -1;  // -1: take whatever the oracle says

  const auto ids = shuffled_ids(n, rng);
  auto cycle_edges = [&](const std::vector<int>& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i)
      g.add_edge(ring[i], ring[(i + 1) % ring.size()]);
  };

  switch (spec.kind) {
    case PlantKind::disjoint_cycles:
    case PlantKind::noisy_cycles: {
      if (spec.t_target < 0 || spec.t_target * h > n)
        throw input_error("plant_instance: need h*t_target <= n");
      int next = 0;
      for (std::int64_t c = 0; c < spec.t_target; ++c) {
        std::vector<int> ring(ids.begin() + next, ids.begin() + next + h);
        cycle_edges(ring);
        next += h;
      }
      if (spec.kind == PlantKind::noisy_cycles) {
        for (int u = 0; u < n; ++u)
          for (int v = (spec.mode == Mode::undirected ? u + 1 : 0); v < n; ++v)
            if (u != v && rng.bernoulli(spec.noise_p)) g.add_edge(u, v);
      } else {
        expected = spec.t_target;
      }
      break;
    }
    case PlantKind::clique_blobs: {
      if (h != 3) throw input_error("plant_instance: clique_blobs is an h=3 preset");
      if (spec.t_target % 4 != 0 || spec.t_target / 4 * 4 > n)
        throw input_error("plant_instance: clique_blobs needs t_target = 4*blobs, 4*blobs <= n");
      const std::int64_t blobs = spec.t_target / 4;
      int next = 0;
      for (std::int64_t b = 0; b < blobs; ++b) {
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) g.add_edge(ids[next + i], ids[next + j]);
        next += 4;
      }
      expected = spec.t_target;
      break;
    }
    case PlantKind::partite_gadget: {
      const int k = spec.core;
      if (k < 1) throw input_error("plant_instance: partite_gadget needs core >= 1");
      if (2 + k * (h - 2) > n)
        throw input_error("plant_instance: partite_gadget does not fit in n");
      int next = 0;
      const int v = ids[next++], u = ids[next++];
      std::vector<std::vector<int>> core(h - 2);
      for (auto& cls : core)
        for (int i = 0; i < k; ++i) cls.push_back(ids[next++]);
      g.add_edge(v, u);
      for (int w : core.front()) g.add_edge(u, w);
      for (int layer = 0; layer + 1 < h - 2; ++layer)
        for (int w1 : core[layer])
          for (int w2 : core[layer + 1]) g.add_edge(w1, w2);
      for (int w : core.back()) g.add_edge(w, v);
      truth.marked = {v, u};
      truth.param_core = k;
      break;
    }
    case PlantKind::witness_one:
    case PlantKind::witness_three: {
      const int rings = spec.kind == PlantKind::witness_one ? 1 : 3;
      if (rings * h > n) throw input_error("plant_instance: witness does not fit in n");
      int next = 0;
      for (int r = 0; r < rings; ++r) {
        std::vector<int> ring(ids.begin() + next, ids.begin() + next + h);
        cycle_edges(ring);
        if (rings == 1) {
          truth.marked.assign(ring.begin(), ring.begin() + 3);
        } else {
          truth.marked.push_back(ring[0]);
        }
        next += h;
      }
      expected = rings;
      break;
    }
  }

  const auto oracle = brute_force_cycles(g, h);
  if (expected >= 0 && oracle.total != static_cast<std::uint64_t>(expected))
    throw internal_error("plant_instance: oracle count " + std::to_string(oracle.total) +
                         " does not match planted target " + std::to_string(expected));
  if (spec.kind == PlantKind::partite_gadget) {
    std::uint64_t want = 1;
    for (int i = 0; i < h - 2; ++i) want *= static_cast<std::uint64_t>(spec.core);
    if (oracle.per_vertex.at(truth.marked[0]) != want)
      throw internal_error("plant_instance: gadget pendant count mismatch");
  }
  truth.total = oracle.total;
  truth.per_vertex = oracle.per_vertex.counts;
  std::sort(truth.marked.begin(), truth.marked.end());
  return {std::move(g), std::move(truth)};
}

}  // namespace cycount
