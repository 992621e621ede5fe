#pragma once

#include <cstdint>
#include <string>

#include "cycount/exact.hpp"
#include "cycount/graph.hpp"
#include "cycount/matmul.hpp"
#include "cycount/rng.hpp"

namespace cycount {

// Claimed bounds on the per-vertex cycle count over a vertex set.
struct HeavyBand {
  double a = 1;
  double b = 1;

  HeavyBand() = default;
  HeavyBand(double a_, double b_);
};

enum class ScaleMode { paper, tuned };

// Every constant the pipeline pins as a polylog expression, in one place.
// Negative field values mean "use the scale mode's default"; paper mode
// evaluates the literal formulas (all logarithms base 2), tuned mode uses
// desk-scale constants suited to n in the hundreds. Any field can be set
// explicitly (CLI: --cfg key=value).
struct EstimatorConfig {
  double eps = 0.25;  // target precision, clamped into (0, 1/2]
  ScaleMode scale_mode = ScaleMode::paper;

  double q_heaviness = -1;     // Q;  paper 8 log^4 n, tuned 1
  double k_const = -1;         // K;  paper log^2 n / 16, tuned 1
  double p_rec = 0.5;          // recursion keep-probability
  double reps_median = -1;     // median-trick repetitions; paper 400 log n, tuned 3
  double reps_discovery = -1;  // discovery repetitions; paper log^4 n, tuned 6
  double czlog_exp = -1;       // light divisor (log n)^e; paper e = h^2, tuned e = 1
  double eps_prime_div = -1;   // eps' = eps / div; paper 4 log n, tuned 2
  double b_mult = -1;          // tuned upper band b = Lambda * b_mult (default 8)
  double find_lambda_tilde = -1;  // tuned lattice threshold (default 1)
  double tau_votes = -1;          // tuned vote threshold (default 1)
  double lambda_small = -1;    // coloring-only search below this threshold (default 2)
  double ell_override = -1;    // tuned batch size for the stratum estimator (default 48)
  double c_var = -1;           // variance constant C (default 1/q^2)
  double enum_budget = static_cast<double>(kDefaultEnumBudget);

  double clamped_eps() const;
  double Q(int n) const;
  double K(int n) const;
  int reps_median_for(int n) const;
  int reps_discovery_for(int n) const;
  double czlog(int n, int h) const;
  double eps_prime(double eps_val, int n) const;
  double band_upper(double lambda, int n) const;
  double lambda_tilde(double lambda, int n, int h) const;
  double tau(int reps, int h) const;
  double lambda_small_cut() const;
  double variance_const(int h) const;

  // Named override for the CLI; returns false for unknown keys.
  bool set_key(const std::string& key, double value);
};

// Probability that a fixed copy through v becomes colorful when the other
// h-1 vertices are colored uniformly with h-1 colors.
double unbias_q(int h);

// Unbiased one-shot estimator of the count of h-cycles through v that meet S
// exactly k times: colors V-{v} with h-1 colors, pins v to the h-th, and
// rescales the colorful count by 1/q.
double approx_vertex_tk(const Graph& g, int h, const VertexSet& S, int k, int v,
                        Rng& rng, WorkCounter& wc);

// Unbiased one-shot estimator of the stratum total: samples u from S
// uniformly and rescales by N_k = |S|/k.
double approx_expected_tk(const Graph& g, int h, const VertexSet& S, int k,
                          Rng& rng, WorkCounter& wc);

// Median of means over batches of the one-shot estimator. Batch size is the
// variance-driven 3*C*b/(a*delta) in paper mode, cfg.ell_override in tuned.
double approx_tk(const Graph& g, int h, const VertexSet& S, int k, HeavyBand band,
                 double delta, const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc);

// Estimate of the number of h-cycles intersecting S, assuming every v in S
// has its cycle count inside the band (violations void the guarantee, they
// are not detected). Sums the per-stratum estimates with delta = eps/(2k).
double count_heavy(const Graph& g, int h, const VertexSet& S, HeavyBand band,
                   double eps, const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc);

}  // namespace cycount
