// Command-line front end: exact and approximate cycle counting, direct access
// to the heavy-vertex primitives, instance generators, and benchmark sweeps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycount/driver.hpp"
#include "cycount/errors.hpp"
#include "cycount/exact.hpp"
#include "cycount/find_heavy.hpp"
#include "cycount/hardness.hpp"

namespace {

using nlohmann::json;
using namespace cycount;

struct CommonOpts {
  std::string input;
  int h = 3;
  double eps = 0.25;
  std::uint64_t seed = 0;
  std::string scale_mode = "paper";
  std::vector<std::string> cfg_pairs;
  std::string out;
  std::string format = "json";
};

EstimatorConfig make_config(const CommonOpts& o) {
  EstimatorConfig cfg;
  cfg.eps = o.eps;
  if (o.scale_mode == "tuned")
    cfg.scale_mode = ScaleMode::tuned;
  else if (o.scale_mode == "paper")
    cfg.scale_mode = ScaleMode::paper;
  else
    throw input_error("--scale-mode must be 'paper' or 'tuned'");
  for (const auto& pair : o.cfg_pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw input_error("--cfg expects key=value: " + pair);
    const std::string key = pair.substr(0, eq);
    double value = 0;
    try {
      value = std::stod(pair.substr(eq + 1));
    } catch (const std::exception&) {
      throw input_error("--cfg value is not a number: " + pair);
    }
    if (!cfg.set_key(key, value)) throw input_error("--cfg unknown key: " + key);
  }
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw input_error("cannot open output file: " + out_path);
  f << text << '\n';
}

VertexSet read_vertex_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open vertex file: " + path);
  std::vector<int> ids;
  std::string tok;
  while (in >> tok) {
    try {
      ids.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw input_error("vertex file: not an integer: " + tok);
    }
  }
  for (int v : ids)
    if (v < 0 || v >= n) throw input_error("vertex file: id out of range");
  return VertexSet(std::move(ids));
}

json truth_to_json(const GroundTruth& t, const PlantSpec* spec) {
  json j;
  j["total"] = t.total;
  j["per_vertex"] = t.per_vertex;
  j["marked"] = t.marked;
  if (t.param_core > 0) j["core"] = t.param_core;
  if (spec) {
    j["n"] = spec->n;
    j["h"] = spec->h;
    j["mode"] = spec->mode == Mode::directed ? "directed" : "undirected";
  }
  return j;
}

int run_exact(const CommonOpts& o, bool per_vertex, double budget) {
  const Graph g = read_graph_file(o.input);
  const auto counts = brute_force_cycles(g, o.h, static_cast<std::uint64_t>(budget));
  json j;
  j["n"] = g.size();
  j["h"] = o.h;
  j["total"] = counts.total;
  if (per_vertex) j["per_vertex"] = counts.per_vertex.counts;
  emit(o.format == "json" ? j.dump(2) : std::to_string(counts.total), o.out);
  return 0;
}

int run_approx(const CommonOpts& o) {
  const Graph g = read_graph_file(o.input);
  const EstimatorConfig cfg = make_config(o);
  const CountReport report = approx_count(g, o.h, cfg, o.seed);
  emit(o.format == "csv" ? CountReport::csv_header() + "\n" + report.to_csv_row()
                         : report.to_json(),
       o.out);
  return 0;
}

int run_find_heavy(const CommonOpts& o, double lambda) {
  const Graph g = read_graph_file(o.input);
  const EstimatorConfig cfg = make_config(o);
  WorkCounter wc;
  Rng rng(o.seed);
  const VertexSet heavy = find_heavy(g, o.h, lambda, cfg, rng, wc);
  json j;
  j["lambda"] = lambda;
  j["seed"] = o.seed;
  j["vertices"] = heavy.members;
  j["work"] = {{"scalar_mults", wc.scalar_mults()}, {"mm_calls", wc.mm_calls().size()}};
  emit(j.dump(2), o.out);
  return 0;
}

int run_count_heavy(const CommonOpts& o, const std::string& s_file, double a, double b) {
  const Graph g = read_graph_file(o.input);
  const EstimatorConfig cfg = make_config(o);
  const VertexSet s = read_vertex_file(s_file, g.size());
  WorkCounter wc;
  Rng rng(o.seed);
  const double estimate = count_heavy(g, o.h, s, HeavyBand(a, b), o.eps, cfg, rng, wc);
  json j;
  j["estimate"] = estimate;
  j["eps"] = o.eps;
  j["seed"] = o.seed;
  j["band"] = {{"a", a}, {"b", b}};
  j["set_size"] = s.size();
  j["work"] = {{"scalar_mults", wc.scalar_mults()}, {"mm_calls", wc.mm_calls().size()}};
  emit(j.dump(2), o.out);
  return 0;
}

struct GenOpts {
  std::string preset = "cycles";
  int n = 60;
  std::int64_t t = 1;
  std::string mode = "undirected";
  int core = 4;
  double noise_p = 0.0;
  int nb = 0;  // tripartite middle-part size (0: n/3)
  double edge_p = 0.3;
};

int run_gen(const CommonOpts& o, const GenOpts& gopt) {
  if (o.out.empty()) throw input_error("gen: --out basename is required");
  Rng rng(o.seed);
  const Mode mode = gopt.mode == "directed" ? Mode::directed : Mode::undirected;

  if (gopt.preset == "blowup" || gopt.preset == "layering") {
    const int part = std::max(2, gopt.n / 3);
    const int nb = gopt.nb > 0 ? gopt.nb : part;
    const TripartiteSpec spec = random_tripartite(part, nb, part, gopt.edge_p, rng);
    const Graph base = tripartite_graph(spec, Mode::undirected);
    const auto base_triangles = brute_force_cycles(base, 3).total;

    Graph out = gopt.preset == "blowup"
                    ? triangle_gap_blowup(spec, static_cast<int>(gopt.t))
                    : hcycle_gap_layering(spec, o.h, gopt.t, mode).graph;
    const auto counts = brute_force_cycles(out, gopt.preset == "blowup" ? 3 : o.h);
    write_graph_file(out, o.out + ".graph");
    json j;
    j["preset"] = gopt.preset;
    j["base_triangles"] = base_triangles;
    j["total"] = counts.total;
    j["per_vertex"] = counts.per_vertex.counts;
    j["t"] = gopt.t;
    emit(j.dump(2), o.out + ".truth.json");
    return 0;
  }

  PlantSpec spec;
  spec.n = gopt.n;
  spec.h = o.h;
  spec.t_target = gopt.t;
  spec.mode = mode;
  spec.core = gopt.core;
  spec.noise_p = gopt.noise_p;
  if (gopt.preset == "cycles")
    spec.kind = PlantKind::disjoint_cycles;
  else if (gopt.preset == "noisy")
    spec.kind = PlantKind::noisy_cycles;
  else if (gopt.preset == "blobs")
    spec.kind = PlantKind::clique_blobs;
  else if (gopt.preset == "gadget")
    spec.kind = PlantKind::partite_gadget;
  else if (gopt.preset == "witness1")
    spec.kind = PlantKind::witness_one;
  else if (gopt.preset == "witness3")
    spec.kind = PlantKind::witness_three;
  else
    throw input_error("gen: unknown preset: " + gopt.preset);

  auto [g, truth] = plant_instance(spec, rng);
  write_graph_file(g, o.out + ".graph");
  emit(truth_to_json(truth, &spec).dump(2), o.out + ".truth.json");
  return 0;
}

int run_bench(const CommonOpts& o, const std::string& n_list, const std::string& t_list,
              int reps) {
  auto parse_list = [](const std::string& text) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw input_error("bench: bad list entry: " + item);
      }
    }
    if (vals.empty()) throw input_error("bench: empty sweep list");
    return vals;
  };
  const auto ns = parse_list(n_list);
  const auto ts = parse_list(t_list);
  const EstimatorConfig cfg = make_config(o);

  std::ostringstream csv;
  csv << "n,t,h,eps,seed,estimate,oracle,scalar_mults,mm_calls,stopping_index,status\n";
  for (const auto n : ns)
    for (const auto t : ts) {
      PlantSpec spec;
      spec.n = static_cast<int>(n);
      spec.h = o.h;
      spec.t_target = t;
      // Disjoint cycles when they fit, clique blobs for denser h=3 targets.
      if (t * o.h <= n) {
        spec.kind = PlantKind::disjoint_cycles;
      } else if (o.h == 3 && t % 4 == 0 && t <= n) {
        spec.kind = PlantKind::clique_blobs;
      } else {
        csv << n << ',' << t << ',' << o.h << ',' << o.eps << ",,,,,,,infeasible\n";
        continue;
      }
      Rng cell_rng = Rng(o.seed).split(static_cast<std::uint64_t>(n * 131 + t));
      auto [g, truth] = plant_instance(spec, cell_rng);
      for (int r = 0; r < reps; ++r) {
        const std::uint64_t run_seed = cell_rng.split(1000 + r).seed();
        WorkCounter wc;
        const CountReport rep =
            approx_count(g, o.h, cfg, run_seed, Blackboxes::standard(), wc);
        const char* status = rep.inconclusive         ? "inconclusive"
                             : rep.used_exact_fallback ? "exact_fallback"
                                                        : "ok";
        const bool success = !rep.inconclusive &&
                             rep.estimate >= (1 - o.eps) * truth.total &&
                             rep.estimate <= (1 + o.eps) * truth.total;
        csv << n << ',' << t << ',' << o.h << ',' << o.eps << ',' << run_seed << ','
            << rep.estimate << ',' << truth.total << ',' << rep.scalar_mults << ','
            << rep.mm_calls << ',' << rep.stopping_index << ','
            << (success ? status : "miss") << '\n';
      }
    }
  emit(csv.str(), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cycount: exact and (1 +/- eps)-approximate h-cycle counting.\n"
      "Graph files: header 'n mode', one 'u v' edge per line, 0-based;\n"
      "undirected files list each edge once.\n"
      "bench CSV columns: n,t,h,eps,seed,estimate,oracle,scalar_mults,\n"
      "mm_calls,stopping_index,status."};
  app.require_subcommand(1);

  CommonOpts o;
  bool per_vertex = false;
  double budget = static_cast<double>(kDefaultEnumBudget);
  double lambda = 1.0;
  std::string s_file;
  double band_a = 1.0, band_b = 1.0;
  GenOpts gopt;
  std::string n_list = "60", t_list = "1";
  int bench_reps = 3;

  auto add_common = [&](CLI::App* cmd, bool needs_input, bool needs_seed) {
    if (needs_input) cmd->add_option("--input", o.input, "graph file")->required();
    cmd->add_option("--h", o.h, "cycle length (>= 3)");
    cmd->add_option("--eps", o.eps, "target precision");
    auto* seed = cmd->add_option("--seed", o.seed, "rng seed (explicit, no clock default)");
    if (needs_seed) seed->required();
    cmd->add_option("--scale-mode", o.scale_mode, "paper | tuned");
    cmd->add_option("--cfg", o.cfg_pairs, "config override key=value (repeatable)");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json | csv");
  };

  auto* exact = app.add_subcommand("exact", "exact cycle count by enumeration");
  add_common(exact, true, false);
  exact->add_flag("--per-vertex", per_vertex, "include per-vertex counts");
  exact->add_option("--budget", budget, "enumeration budget");

  auto* approx = app.add_subcommand("approx", "approximate count, JSON report");
  add_common(approx, true, true);

  auto* fh = app.add_subcommand("find-heavy", "superset of lambda-heavy vertices");
  add_common(fh, true, true);
  fh->add_option("--lambda", lambda, "heaviness threshold")->required();

  auto* ch = app.add_subcommand("count-heavy", "estimate cycles meeting a vertex set");
  add_common(ch, true, true);
  ch->add_option("--s-file", s_file, "file of vertex ids")->required();
  ch->add_option("--a", band_a, "band lower bound");
  ch->add_option("--b", band_b, "band upper bound");

  auto* gen = app.add_subcommand("gen", "emit planted instances and gap gadgets");
  add_common(gen, false, true);
  gen->add_option("--preset", gopt.preset,
                  "cycles | noisy | blobs | gadget | witness1 | witness3 | blowup | layering");
  gen->add_option("--n", gopt.n, "vertex count");
  gen->add_option("--t", gopt.t, "planted target / gap factor");
  gen->add_option("--mode", gopt.mode, "directed | undirected");
  gen->add_option("--core", gopt.core, "gadget core class size");
  gen->add_option("--noise-p", gopt.noise_p, "background edge probability");
  gen->add_option("--nb", gopt.nb, "tripartite middle part size");
  gen->add_option("--edge-p", gopt.edge_p, "tripartite edge probability");

  auto* bench = app.add_subcommand("bench", "sweep (n, t) grid, CSV output");
  add_common(bench, false, true);
  bench->add_option("--n-list", n_list, "comma-separated n values");
  bench->add_option("--t-list", t_list, "comma-separated planted t values");
  bench->add_option("--reps", bench_reps, "seeded runs per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.h < 3) throw input_error("--h must be at least 3");
    if (exact->parsed()) return run_exact(o, per_vertex, budget);
    if (approx->parsed()) return run_approx(o);
    if (fh->parsed()) return run_find_heavy(o, lambda);
    if (ch->parsed()) return run_count_heavy(o, s_file, band_a, band_b);
    if (gen->parsed()) return run_gen(o, gopt);
    if (bench->parsed()) return run_bench(o, n_list, t_list, bench_reps);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 3;
  } catch (const overflow_error& e) {
    std::cerr << "overflow error: " << e.what() << '\n';
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
