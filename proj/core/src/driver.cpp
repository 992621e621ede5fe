#include "cycount/driver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cycount/errors.hpp"
#include "cycount/exact.hpp"
#include "cycount/find_heavy.hpp"

namespace cycount {

namespace {

double log2n(int n) { return std::log2(static_cast<double>(std::max(n, 2))); }

struct PeelContext {
  const EstimatorConfig& cfg;
  const Blackboxes& bb;
  int h;
  int root_n;  // polylog formulas are evaluated at the root size
  double eps;
  double eps_prime;
  int depth_cap;
  WorkCounter* wc;
};

double peel_recurse(PeelContext& ctx, const Graph& g, double lambda, int level,
                    Rng rng, PeelTrace& trace) {
  if (level > ctx.depth_cap)
    throw internal_error("peel_estimate: recursion depth cap breached");

  Rng fh_rng = rng.split(1);
  Rng ch_rng = rng.split(2);
  Rng sample_rng = rng.split(3);

  const VertexSet heavy = ctx.bb.find_heavy(g, ctx.h, lambda, ctx.cfg, fh_rng, *ctx.wc);
  const double a = lambda / ctx.cfg.czlog(ctx.root_n, ctx.h);
  const double b = ctx.cfg.band_upper(lambda, ctx.root_n);
  const HeavyBand band(std::max(a, 1e-300), std::max(b, std::max(a, 1e-300)));

  const double heavy_estimate =
      ctx.bb.count_heavy(g, ctx.h, heavy, band, ctx.eps_prime, ctx.cfg, ch_rng, *ctx.wc);

  trace.levels.push_back(LevelRecord{level, lambda, g.size() - heavy.size(),
                                     heavy_estimate, rng.seed()});

  if (lambda <= 1.0) return heavy_estimate;

  std::vector<int> rest;
  for (int v = 0; v < g.size(); ++v)
    if (!heavy.contains(v)) rest.push_back(v);
  const Graph remainder = induced_subgraph(g, VertexSet(std::move(rest)));
  const Graph sampled = bernoulli_sample(remainder, ctx.cfg.p_rec, sample_rng);

  const double ph = std::pow(ctx.cfg.p_rec, ctx.h);
  const double child =
      peel_recurse(ctx, sampled, lambda * ph, level + 1, rng.split(4), trace);
  return heavy_estimate + child / ph;
}

}  // namespace

Blackboxes Blackboxes::standard() {
  Blackboxes bb;
  bb.find_heavy = [](const Graph& g, int h, double lambda, const EstimatorConfig& cfg,
                     Rng& rng, WorkCounter& wc) {
    return cycount::find_heavy(g, h, lambda, cfg, rng, wc);
  };
  bb.count_heavy = [](const Graph& g, int h, const VertexSet& s, HeavyBand band,
                      double eps_prime, const EstimatorConfig& cfg, Rng& rng,
                      WorkCounter& wc) {
    return cycount::count_heavy(g, h, s, band, eps_prime, cfg, rng, wc);
  };
  return bb;
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw input_error("median_of: empty input");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

PeelTrace peel_estimate(const Graph& g, int h, double lambda,
                        const EstimatorConfig& cfg, const Blackboxes& bb,
                        Rng& rng, WorkCounter& wc) {
  if (!(lambda > 0)) throw input_error("peel_estimate: lambda must be positive");
  if (h < 3) throw input_error("peel_estimate: h must be >= 3");
  const double eps = cfg.clamped_eps();
  PeelContext ctx{cfg,
                  bb,
                  h,
                  g.size(),
                  eps,
                  cfg.eps_prime(eps, g.size()),
                  static_cast<int>(log2n(g.size())) + 2,
                  &wc};
  PeelTrace trace;
  trace.estimate = peel_recurse(ctx, g, lambda, 0, rng.split(0), trace);
  return trace;
}

CountReport approx_count(const Graph& g, int h, const EstimatorConfig& cfg,
                         std::uint64_t seed, const Blackboxes& bb, WorkCounter& wc) {
  if (h < 3) throw input_error("approx_count: h must be >= 3");
  CountReport report;
  report.eps = cfg.clamped_eps();
  report.seed = seed;
  report.h = h;
  report.n = g.size();

  const int n = g.size();
  if (n == 0) {
    report.used_exact_fallback = true;
    return report;
  }

  const double eps = report.eps;
  const double w0 = std::pow(static_cast<double>(n), h);
  const double lambda0 = w0 * eps * eps / cfg.Q(n);
  const int imax = static_cast<int>(std::floor(h * log2n(n)));
  const int reps = cfg.reps_median_for(n);

  Rng root(seed);
  for (int i = 0; i <= imax; ++i) {
    const double lambda = lambda0 / std::ldexp(1.0, i);
    std::vector<double> runs(reps);
    std::vector<PeelTrace> traces(reps);
    for (int j = 0; j < reps; ++j) {
      Rng run_rng = root.split(static_cast<std::uint64_t>(i) * 131071 + j);
      traces[j] = peel_estimate(g, h, lambda, cfg, bb, run_rng, wc);
      runs[j] = traces[j].estimate;
    }
    const double med = median_of(runs);
    report.medians.push_back(med);
    if (med >= w0 / std::ldexp(1.0, i)) {
      report.estimate = med;
      report.stopping_index = i;
      for (int j = 0; j < reps; ++j)
        if (runs[j] == med) {
          report.trace = traces[j];
          break;
        }
      report.scalar_mults = wc.scalar_mults();
      report.mm_calls = wc.mm_calls().size();
      return report;
    }
  }

  report.used_exact_fallback = true;
  try {
    const auto exact = brute_force_cycles(g, h, static_cast<std::uint64_t>(cfg.enum_budget));
    report.estimate = static_cast<double>(exact.total);
  } catch (const budget_error&) {
    report.inconclusive = true;
  }
  report.scalar_mults = wc.scalar_mults();
  report.mm_calls = wc.mm_calls().size();
  return report;
}

CountReport approx_count(const Graph& g, int h, const EstimatorConfig& cfg,
                         std::uint64_t seed) {
  WorkCounter wc;
  return approx_count(g, h, cfg, seed, Blackboxes::standard(), wc);
}

std::string CountReport::to_json() const {
  nlohmann::json j;
  j["estimate"] = estimate;
  j["eps"] = eps;
  j["seed"] = seed;
  j["h"] = h;
  j["n"] = n;
  j["stopping_index"] = stopping_index;
  j["used_exact_fallback"] = used_exact_fallback;
  j["inconclusive"] = inconclusive;
  j["medians"] = medians;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lr : trace.levels) {
    levels.push_back({{"level", lr.level},
                      {"lambda", lr.lambda},
                      {"vertices_after_removal", lr.vertices_after_removal},
                      {"heavy_estimate", lr.heavy_estimate},
                      {"seed", lr.seed}});
  }
  j["trace"] = levels;
  j["work"] = {{"scalar_mults", scalar_mults}, {"mm_calls", mm_calls}};
  return j.dump(2);
}

std::string CountReport::csv_header() {
  return "n,h,eps,seed,estimate,stopping_index,used_exact_fallback,inconclusive,"
         "scalar_mults,mm_calls";
}

std::string CountReport::to_csv_row() const {
  std::ostringstream os;
  os << n << ',' << h << ',' << eps << ',' << seed << ',' << estimate << ','
     << stopping_index << ',' << (used_exact_fallback ? 1 : 0) << ','
     << (inconclusive ? 1 : 0) << ',' << scalar_mults << ',' << mm_calls;
  return os.str();
}

}  // namespace cycount
