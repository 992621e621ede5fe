#include "cycount/count_heavy.hpp"

#include <algorithm>
#include <cmath>

#include "cycount/driver.hpp"
#include "cycount/errors.hpp"

namespace cycount {

namespace {

double log2n(int n) { return std::log2(static_cast<double>(std::max(n, 2))); }

}  // namespace

HeavyBand::HeavyBand(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0) || !(a <= b)) throw input_error("HeavyBand: need 0 < a <= b");
}

double EstimatorConfig::clamped_eps() const {
  if (!(eps > 0)) throw input_error("eps must be positive");
  return std::min(eps, 0.5);
}

double EstimatorConfig::Q(int n) const {
  if (q_heaviness > 0) return q_heaviness;
  if (scale_mode == ScaleMode::tuned) return 1.0;
  const double l = log2n(n);
  return 8.0 * l * l * l * l;
}

double EstimatorConfig::K(int n) const {
  if (k_const > 0) return k_const;
  if (scale_mode == ScaleMode::tuned) return 1.0;
  const double l = log2n(n);
  return l * l / 16.0;
}

int EstimatorConfig::reps_median_for(int n) const {
  const double r = reps_median > 0
                       ? reps_median
                       : (scale_mode == ScaleMode::tuned ? 3.0 : 400.0 * log2n(n));
  return std::max(1, static_cast<int>(std::ceil(r)));
}

int EstimatorConfig::reps_discovery_for(int n) const {
  const double l = log2n(n);
  const double r = reps_discovery > 0
                       ? reps_discovery
                       : (scale_mode == ScaleMode::tuned ? 6.0 : l * l * l * l);
  return std::max(1, static_cast<int>(std::ceil(r)));
}

double EstimatorConfig::czlog(int n, int h) const {
  const double e = czlog_exp >= 0
                       ? czlog_exp
                       : (scale_mode == ScaleMode::tuned ? 1.0
                                                         : static_cast<double>(h) * h);
  return std::pow(log2n(n), e);
}

double EstimatorConfig::eps_prime(double eps_val, int n) const {
  const double div = eps_prime_div > 0
                         ? eps_prime_div
                         : (scale_mode == ScaleMode::tuned ? 2.0 : 4.0 * log2n(n));
  return eps_val / div;
}

double EstimatorConfig::band_upper(double lambda, int n) const {
  if (scale_mode == ScaleMode::tuned) {
    const double mult = b_mult > 0 ? b_mult : 8.0;
    return lambda * mult;
  }
  const double e = clamped_eps();
  return lambda * 8.0 * Q(n) / (e * e);
}

double EstimatorConfig::lambda_tilde(double lambda, int n, int h) const {
  if (scale_mode == ScaleMode::tuned)
    return find_lambda_tilde > 0 ? find_lambda_tilde : 1.0;
  const double s = std::pow(static_cast<double>(h), -h);
  const double slack = std::pow(2.0 * h * log2n(n),
                                static_cast<double>(h - 1) * (h - 1)) *
                       2.0 / s;
  return lambda / slack;
}

double EstimatorConfig::tau(int reps, int h) const {
  if (scale_mode == ScaleMode::tuned && tau_votes > 0) return tau_votes;
  if (scale_mode == ScaleMode::tuned) return 1.0;
  const double s = std::pow(static_cast<double>(h), -h);
  return reps * std::pow(1.0 - 1.0 / std::exp(1.0), h - 1) * s / 4.0;
}

double EstimatorConfig::lambda_small_cut() const {
  return lambda_small > 0 ? lambda_small : 2.0;
}

double EstimatorConfig::variance_const(int h) const {
  if (c_var > 0) return c_var;
  const double q = unbias_q(h);
  return 1.0 / (q * q);
}

bool EstimatorConfig::set_key(const std::string& key, double value) {
  struct Entry {
    const char* name;
    double EstimatorConfig::* field;
  };
  static const Entry table[] = {
      {"eps", &EstimatorConfig::eps},
      {"q_heaviness", &EstimatorConfig::q_heaviness},
      {"k_const", &EstimatorConfig::k_const},
      {"p_rec", &EstimatorConfig::p_rec},
      {"reps_median", &EstimatorConfig::reps_median},
      {"reps_discovery", &EstimatorConfig::reps_discovery},
      {"czlog_exp", &EstimatorConfig::czlog_exp},
      {"eps_prime_div", &EstimatorConfig::eps_prime_div},
      {"b_mult", &EstimatorConfig::b_mult},
      {"find_lambda_tilde", &EstimatorConfig::find_lambda_tilde},
      {"tau_votes", &EstimatorConfig::tau_votes},
      {"lambda_small", &EstimatorConfig::lambda_small},
      {"ell_override", &EstimatorConfig::ell_override},
      {"c_var", &EstimatorConfig::c_var},
      {"enum_budget", &EstimatorConfig::enum_budget},
  };
  for (const auto& e : table)
    if (key == e.name) {
      this->*(e.field) = value;
      return true;
    }
  return false;
}

double unbias_q(int h) {
  if (h < 3) throw input_error("unbias_q: h must be >= 3");
  double fact = 1.0;
  for (int i = 2; i <= h - 1; ++i) fact *= i;
  return fact / std::pow(static_cast<double>(h - 1), h - 1);
}

double approx_vertex_tk(const Graph& g, int h, const VertexSet& S, int k, int v,
                        Rng& rng, WorkCounter& wc) {
  if (!S.contains(v)) throw input_error("approx_vertex_tk: v must be in S");
  if (k < 1 || k > h) throw input_error("approx_vertex_tk: k out of [1,h]");
  const int n = g.size();
  std::vector<int> color(n);
  for (int u = 0; u < n; ++u) color[u] = u == v ? h - 1 : rng.uniform_int(h - 1);
  const Coloring phi(std::move(color), h);
  const std::uint64_t colorful = count_colorful_k_at(g, phi, S, k, v, wc);
  return static_cast<double>(colorful) / unbias_q(h);
}

double approx_expected_tk(const Graph& g, int h, const VertexSet& S, int k,
                          Rng& rng, WorkCounter& wc) {
  if (S.empty()) throw input_error("approx_expected_tk: S must be non-empty");
  const int u = S.members[rng.uniform_int(S.size())];
  const double n_k = static_cast<double>(S.size()) / k;
  return approx_vertex_tk(g, h, S, k, u, rng, wc) * n_k;
}

double approx_tk(const Graph& g, int h, const VertexSet& S, int k, HeavyBand band,
                 double delta, const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc) {
  if (!(delta > 0) || delta > 1) throw input_error("approx_tk: delta out of (0,1]");
  if (S.empty()) return 0.0;

  std::int64_t ell;
  if (cfg.scale_mode == ScaleMode::tuned && cfg.ell_override > 0) {
    ell = static_cast<std::int64_t>(std::ceil(cfg.ell_override));
  } else {
    const double c = cfg.variance_const(h);
    ell = static_cast<std::int64_t>(std::ceil(3.0 * c * band.b / (band.a * delta)));
  }
  ell = std::max<std::int64_t>(1, ell);
  const int reps = cfg.reps_median_for(g.size());

  std::vector<double> batch_means(reps);
  for (int r = 0; r < reps; ++r) {
    Rng batch_rng = rng.split(static_cast<std::uint64_t>(r));
    double sum = 0;
    for (std::int64_t i = 0; i < ell; ++i) {
      Rng call_rng = batch_rng.split(static_cast<std::uint64_t>(i));
      sum += approx_expected_tk(g, h, S, k, call_rng, wc);
    }
    batch_means[r] = sum / static_cast<double>(ell);
  }
  return median_of(batch_means);
}

double count_heavy(const Graph& g, int h, const VertexSet& S, HeavyBand band,
                   double eps, const EstimatorConfig& cfg, Rng& rng, WorkCounter& wc) {
  if (S.empty()) return 0.0;
  eps = std::min(std::max(eps, 1e-9), 0.5);
  double total = 0;
  for (int k = 1; k <= h; ++k) {
    Rng stratum_rng = rng.split(static_cast<std::uint64_t>(k));
    total += approx_tk(g, h, S, k, band, eps / (2.0 * k), cfg, stratum_rng, wc);
  }
  return total;
}

}  // namespace cycount
