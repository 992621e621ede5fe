#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cycount/exact.hpp"
#include "cycount/graph.hpp"
#include "cycount/rng.hpp"

namespace cycount {

// Tripartite instance A | B | C with per-pair edge lists (indices are local
// to each part).
struct TripartiteSpec {
  int na = 0, nb = 0, nc = 0;
  std::vector<std::pair<int, int>> ab, bc, ca;
};

TripartiteSpec random_tripartite(int na, int nb, int nc, double edge_p, Rng& rng);

// The tripartite instance itself as a graph: vertices laid out [A | B | C].
Graph tripartite_graph(const TripartiteSpec& spec, Mode mode);

// Replaces B with t copies of itself; triangle counts scale exactly by t and
// zero stays zero.
Graph triangle_gap_blowup(const TripartiteSpec& spec, int t);

struct LayeringResult {
  Graph graph;
  std::int64_t ell = 0;         // per-layer copy count (ceiled t^(1/(h-2)))
  std::int64_t realized_t = 0;  // ell^(h-2): exact h-cycles per input triangle
};

// Stretches B into h-2 layers of ell copies so each input triangle yields
// exactly ell^(h-2) h-cycles. Undirected output only for odd h; an even-h
// undirected layering collapses to a bipartite-style graph and is rejected.
LayeringResult hcycle_gap_layering(const TripartiteSpec& spec, int h,
                                   std::int64_t t, Mode mode);

enum class PlantKind {
  disjoint_cycles,  // exactly t_target vertex-disjoint h-cycles plus padding
  noisy_cycles,     // disjoint cycles over a background edge sprinkle
  clique_blobs,     // h=3: disjoint K4 blobs, 4 triangles each
  partite_gadget,   // pendant pair against a complete layered core
  witness_one,      // one cycle holding all marked vertices
  witness_three     // three disjoint cycles holding one marked vertex each
};

struct PlantSpec {
  PlantKind kind = PlantKind::disjoint_cycles;
  int n = 0;
  int h = 3;
  std::int64_t t_target = 0;
  Mode mode = Mode::undirected;
  int core = 0;          // partite_gadget: vertices per core class
  double noise_p = 0.0;  // noisy_cycles: background edge probability
};

struct GroundTruth {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_vertex;
  std::vector<int> marked;     // witness S / gadget pendant vertices
  std::int64_t param_core = 0; // gadget core size (pendant count = core^(h-2))
};

// Emits a graph plus enumeration-verified ground truth. A planted target the
// oracle cannot confirm is an internal error, so the corpus is
// self-certifying; infeasible specs are input errors.
std::pair<Graph, GroundTruth> plant_instance(const PlantSpec& spec, Rng& rng);

}  // namespace cycount
