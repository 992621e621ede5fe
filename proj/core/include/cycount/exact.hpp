#pragma once

#include <cstdint>
#include <vector>

#include "cycount/graph.hpp"
#include "cycount/matmul.hpp"

namespace cycount {

// Ordered sequence of pairwise-disjoint vertex classes.
struct OrderedPartition {
  std::vector<VertexSet> classes;

  explicit OrderedPartition(std::vector<VertexSet> cls);
  int num_classes() const { return static_cast<int>(classes.size()); }
};

struct PerVertexCounts {
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int v) const { return counts[v]; }
  std::uint64_t sum() const;
};

struct CycleCounts {
  std::uint64_t total = 0;
  PerVertexCounts per_vertex;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 400'000'000ull;

// Exact enumeration of h-cycles. A copy is one rotation class (directed) or
// one rotation+reflection class (undirected); per_vertex(v) counts copies
// through v, so sum(per_vertex) == h * total. The budget bounds search-tree
// nodes; exceeding it raises budget_error.
CycleCounts brute_force_cycles(const Graph& g, int h,
                               std::uint64_t budget = kDefaultEnumBudget);

// Per-vertex counts of ordered cycles (v_1,...,v_h) with v_i in sigma's i-th
// class and consecutive (and wrap-around) edges present. Computed by the
// anchored matrix chain over adjacency blocks; never enumerates tuples.
PerVertexCounts count_t_sigma(const Graph& g, const OrderedPartition& sigma,
                              WorkCounter& wc);

// Per-vertex counts of phi-colorful h-cycles meeting S exactly k times,
// h = phi.num_classes. Splits classes by membership in S over all weight-k
// selections, runs the ordered-chain counter over canonical class orders, and
// divides by the cycle automorphisms (2h undirected, h directed); an inexact
// division is an internal error.
PerVertexCounts count_colorful_k(const Graph& g, const Coloring& phi,
                                 const VertexSet& S, int k, WorkCounter& wc);

// Same count at a single vertex; cheaper because every matrix in the chain
// is sliced to v's row.
std::uint64_t count_colorful_k_at(const Graph& g, const Coloring& phi,
                                  const VertexSet& S, int k, int v,
                                  WorkCounter& wc);

// Total number of phi-colorful h-cycles meeting S exactly k times:
// sum over v in S of count_colorful_k, divided (exactly) by k.
std::uint64_t count_colorful_total(const Graph& g, const Coloring& phi,
                                   const VertexSet& S, int k, WorkCounter& wc);

}  // namespace cycount
