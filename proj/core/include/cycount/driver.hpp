#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cycount/count_heavy.hpp"
#include "cycount/graph.hpp"
#include "cycount/matmul.hpp"
#include "cycount/rng.hpp"

namespace cycount {

struct LevelRecord {
  int level = 0;
  double lambda = 0;
  int vertices_after_removal = 0;
  double heavy_estimate = 0;
  std::uint64_t seed = 0;
};

struct PeelTrace {
  std::vector<LevelRecord> levels;
  double estimate = 0;
};

// The two estimation primitives the recursion composes. Swappable so tests
// can substitute exact oracles for either side.
struct Blackboxes {
  using FindHeavyFn = std::function<VertexSet(
      const Graph&, int h, double lambda, const EstimatorConfig&, Rng&, WorkCounter&)>;
  using CountHeavyFn = std::function<double(
      const Graph&, int h, const VertexSet&, HeavyBand, double eps_prime,
      const EstimatorConfig&, Rng&, WorkCounter&)>;

  FindHeavyFn find_heavy;
  CountHeavyFn count_heavy;

  static Blackboxes standard();
};

// Lower median (element (size-1)/2 of the sorted values).
double median_of(std::vector<double> values);

// One peeling pass: estimate cycles through the heavy set, remove it, sample
// the remainder at p_rec, recurse with threshold lambda * p_rec^h, and
// rescale. Depth is capped at log2(n)+2 as a failsafe.
PeelTrace peel_estimate(const Graph& g, int h, double lambda,
                        const EstimatorConfig& cfg, const Blackboxes& bb,
                        Rng& rng, WorkCounter& wc);

struct CountReport {
  double estimate = 0;
  double eps = 0;
  std::uint64_t seed = 0;
  int h = 0;
  int n = 0;
  int stopping_index = -1;  // -1 when the exact fallback produced the answer
  bool used_exact_fallback = false;
  bool inconclusive = false;  // fallback hit the enumeration budget
  std::vector<double> medians;
  PeelTrace trace;  // trace of the run that realized the returned median
  std::uint64_t scalar_mults = 0;
  std::uint64_t mm_calls = 0;

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

// Threshold-halving driver: run medians of peel_estimate at lambda/2^i until
// the estimate clears the shrinking guess W/2^i, falling back to exact
// enumeration when no iteration does.
CountReport approx_count(const Graph& g, int h, const EstimatorConfig& cfg,
                         std::uint64_t seed, const Blackboxes& bb, WorkCounter& wc);

CountReport approx_count(const Graph& g, int h, const EstimatorConfig& cfg,
                         std::uint64_t seed);

}  // namespace cycount
