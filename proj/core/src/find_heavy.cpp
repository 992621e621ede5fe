#include "cycount/find_heavy.hpp"

#include <algorithm>
#include <cmath>

#include "cycount/errors.hpp"
#include "cycount/exact.hpp"

namespace cycount {

double SampleVector::product() const {
  double prod = 1.0;
  for (double x : p) prod *= x;
  return prod;
}

std::vector<SampleVector> product_set(int h, double lambda) {
  if (h < 3) throw input_error("product_set: h must be >= 3");
  if (lambda < 1) throw input_error("product_set: lambda must be >= 1");
  const int jmax = static_cast<int>(std::floor(std::log2(lambda) + 1.0 + 1e-9));

  std::vector<SampleVector> out;
  std::vector<int> exps(h, 0);
  while (true) {
    int sum = 0;
    for (int e : exps) sum += e;
    // 2^-sum <= 1/lambda, evaluated as lambda <= 2^sum with a boundary slack.
    if (lambda <= std::ldexp(1.0, sum) * (1.0 + 1e-9)) {
      SampleVector v;
      v.p.resize(h);
      for (int i = 0; i < h; ++i) v.p[i] = std::ldexp(1.0, -exps[i]);
      out.push_back(std::move(v));
    }
    int pos = h - 1;
    while (pos >= 0 && exps[pos] == jmax) exps[pos--] = 0;
    if (pos < 0) break;
    ++exps[pos];
  }
  return out;
}

VertexSet p_discovery(const Graph& g, int h, const SampleVector& P, Rng& rng,
                      WorkCounter& wc) {
  if (static_cast<int>(P.p.size()) != h)
    throw input_error("p_discovery: vector length must equal h");
  for (double x : P.p)
    if (x < 0 || x > 1) throw input_error("p_discovery: probability out of range");

  const Coloring phi = random_coloring(g.size(), h, rng);
  std::vector<int> kept;
  for (int v = 0; v < g.size(); ++v)
    if (rng.bernoulli(P.p[phi.color[v]])) kept.push_back(v);

  const VertexSet kept_set{std::vector<int>(kept)};
  const Graph sub = induced_subgraph(g, kept_set);

  std::vector<int> sub_color(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) sub_color[i] = phi.color[kept[i]];
  const Coloring sub_phi(std::move(sub_color), h);

  const Graph layered = layered_graph(sub, sub_phi);

  // In the layered graph every colorful cycle follows the cyclic class order,
  // so one ordered chain counts them all (route equality with the general
  // colorful counter is covered by tests).
  const OrderedPartition sigma(sub_phi.classes());
  const PerVertexCounts counts = count_t_sigma(layered, sigma, wc);

  std::vector<int> discovered;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (counts.at(static_cast<int>(i)) > 0) discovered.push_back(kept[i]);
  return VertexSet(std::move(discovered));
}

DiscoveryTally discovery_tallies(const Graph& g, int h, const SampleVector& P,
                                 int reps, Rng& rng, WorkCounter& wc) {
  DiscoveryTally t;
  t.reps = reps;
  t.tally.assign(g.size(), 0);
  for (int r = 0; r < reps; ++r) {
    Rng run_rng = rng.split(static_cast<std::uint64_t>(r));
    const VertexSet found = p_discovery(g, h, P, run_rng, wc);
    for (int v : found.members) ++t.tally[v];
  }
  return t;
}

VertexSet find_heavy(const Graph& g, int h, double lambda,
                     const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc) {
  if (!(lambda > 0)) throw input_error("find_heavy: lambda must be positive");
  const int n = g.size();
  const int reps = cfg.reps_discovery_for(n);
  std::vector<char> in_set(n, 0);

  if (lambda <= cfg.lambda_small_cut()) {
    // Coloring-only search: no vertex sampling, union over repetitions.
    SampleVector ones;
    ones.p.assign(h, 1.0);
    Rng branch_rng = rng.split(0);
    for (int r = 0; r < reps; ++r) {
      Rng run_rng = branch_rng.split(static_cast<std::uint64_t>(r));
      for (int v : p_discovery(g, h, ones, run_rng, wc).members) in_set[v] = 1;
    }
  } else {
    const double lt = std::max(1.0, cfg.lambda_tilde(lambda, n, h));
    const double tau = cfg.tau(reps, h);
    const auto vectors = product_set(h, lt);
    for (std::size_t pi = 0; pi < vectors.size(); ++pi) {
      Rng vec_rng = rng.split(pi + 1);
      const DiscoveryTally t = discovery_tallies(g, h, vectors[pi], reps, vec_rng, wc);
      for (int v = 0; v < n; ++v)
        if (t.tally[v] >= tau) in_set[v] = 1;
    }
  }

  std::vector<int> members;
  for (int v = 0; v < n; ++v)
    if (in_set[v]) members.push_back(v);
  return VertexSet(std::move(members));
}

}  // namespace cycount
