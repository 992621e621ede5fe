#pragma once

#include <cstdint>
#include <vector>

#include "cycount/count_heavy.hpp"
#include "cycount/graph.hpp"
#include "cycount/matmul.hpp"
#include "cycount/rng.hpp"

namespace cycount {

// Per-class keep-probabilities, all dyadic.
struct SampleVector {
  std::vector<double> p;

  double product() const;
};

struct DiscoveryTally {
  int reps = 0;
  std::vector<int> tally;  // per vertex, 0 <= tally <= reps
};

// The dyadic probability-vector lattice: every coordinate is 2^-j for
// 0 <= j <= log2(lambda)+1 and the coordinate product is at most 1/lambda.
// Enumerated exhaustively in lexicographic exponent order.
std::vector<SampleVector> product_set(int h, double lambda);

// One discovery experiment: color with h colors, keep class-i vertices with
// probability p_i, layer the kept graph, and report every vertex that lies on
// a colorful h-cycle there. Vertex ids are g's own ids.
VertexSet p_discovery(const Graph& g, int h, const SampleVector& P, Rng& rng,
                      WorkCounter& wc);

// `reps` independent discovery experiments under one vector.
DiscoveryTally discovery_tallies(const Graph& g, int h, const SampleVector& P,
                                 int reps, Rng& rng, WorkCounter& wc);

// Superset of the lambda-heavy vertices. Below cfg.lambda_small the search is
// pure repeated coloring with no vertex sampling; above it, every vector of
// the lattice at the slack-reduced threshold votes, and vertices discovered
// at least tau times under some vector are returned.
VertexSet find_heavy(const Graph& g, int h, double lambda,
                     const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc);

}  // namespace cycount
