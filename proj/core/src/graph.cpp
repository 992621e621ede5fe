#include "cycount/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cycount/errors.hpp"

namespace cycount {

VertexSet::VertexSet(std::vector<int> ids) : members(std::move(ids)) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw input_error("VertexSet: duplicate vertex id");
  if (!members.empty() && members.front() < 0)
    throw input_error("VertexSet: negative vertex id");
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Coloring::Coloring(std::vector<int> c, int k) : color(std::move(c)), num_classes(k) {
  if (k < 1) throw input_error("Coloring: need at least one class");
  for (int x : color)
    if (x < 0 || x >= k) throw input_error("Coloring: color out of range");
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(num_classes);
  for (int v = 0; v < size(); ++v) out[color[v]].members.push_back(v);
  return out;  // members already sorted: ascending v
}

Graph::Graph(int n, Mode mode) : n_(n), words_((n + 63) / 64), mode_(mode) {
  if (n < 0) throw input_error("Graph: negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw input_error("add_edge: vertex out of range");
  if (u == v) throw input_error("add_edge: self-loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  if (mode_ == Mode::undirected)
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

std::int64_t Graph::edge_count() const {
  std::int64_t ones = 0;
  for (std::uint64_t w : bits_) ones += __builtin_popcountll(w);
  return mode_ == Mode::undirected ? ones / 2 : ones;
}

void Graph::set_labels(std::vector<int> labels) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n_)
      throw input_error("set_labels: size mismatch");
    std::unordered_set<int> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n_)
      throw input_error("set_labels: labels must be distinct");
  }
  labels_ = std::move(labels);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (int v : keep.members)
    if (v >= g.size()) throw input_error("induced_subgraph: vertex out of range");
  const int m = keep.size();
  Graph sub(m, g.mode());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.has_edge(keep.members[i], keep.members[j])) sub.add_edge(i, j);
  std::vector<int> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = g.label_of(keep.members[i]);
  sub.set_labels(std::move(labels));
  return sub;
}

Graph bernoulli_sample(const Graph& g, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw input_error("bernoulli_sample: p out of [0,1]");
  std::vector<int> kept;
  for (int v = 0; v < g.size(); ++v)
    if (rng.bernoulli(p)) kept.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(kept)));
}

Coloring random_coloring(int n, int num_classes, Rng& rng) {
  if (num_classes < 1) throw input_error("random_coloring: need at least one class");
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = rng.uniform_int(num_classes);
  return Coloring(std::move(color), num_classes);
}

Graph layered_graph(const Graph& g, const Coloring& phi) {
  if (phi.size() != g.size()) throw input_error("layered_graph: coloring size mismatch");
  const int h = phi.num_classes;
  Graph out(g.size(), Mode::directed);
  for (int u = 0; u < g.size(); ++u) {
    const int cu = phi.color[u];
    const int want = (cu + 1) % h;
    for (int v = 0; v < g.size(); ++v) {
      if (u == v || phi.color[v] != want) continue;
      if (g.has_edge(u, v) || (g.mode() == Mode::undirected && g.has_edge(v, u)))
        out.add_edge(u, v);
    }
  }
  out.set_labels(g.labels());
  return out;
}

Graph read_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw input_error("graph file: missing header");
  std::istringstream hs(header);
  int n = -1;
  std::string mode_word;
  if (!(hs >> n >> mode_word)) throw input_error("graph file: bad header, want 'n mode'");
  Mode mode;
  if (mode_word == "directed") mode = Mode::directed;
  else if (mode_word == "undirected") mode = Mode::undirected;
  else throw input_error("graph file: mode must be 'directed' or 'undirected'");
  Graph g(n, mode);
  int u, v;
  while (in >> u >> v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("graph file: edge endpoint out of range");
    g.add_edge(u, v);
  }
  if (!in.eof() && in.fail()) throw input_error("graph file: malformed edge line");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.size() << ' ' << (g.mode() == Mode::directed ? "directed" : "undirected") << '\n';
  for (int u = 0; u < g.size(); ++u)
    for (int v = (g.mode() == Mode::undirected ? u + 1 : 0); v < g.size(); ++v)
      if (u != v && g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  write_graph(g, out);
}

}  // namespace cycount
