#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cycount/rng.hpp"

namespace cycount {

enum class Mode { directed, undirected };

// Sorted, duplicate-free set of vertex ids.
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);  // sorts, rejects duplicates

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(int v) const;
};

// Vertex -> color class map. Classes are 0-based: 0..num_classes-1.
struct Coloring {
  std::vector<int> color;
  int num_classes = 0;

  Coloring() = default;
  Coloring(std::vector<int> color, int num_classes);

  int size() const { return static_cast<int>(color.size()); }
  std::vector<VertexSet> classes() const;
};

// Dense bit-packed adjacency. Immutable once construction finishes; safe to
// share across threads afterwards. No self-loops; undirected graphs store
// both orientations.
class Graph {
 public:
  Graph(int n, Mode mode);

  int size() const { return n_; }
  Mode mode() const { return mode_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::int64_t edge_count() const;  // undirected edges counted once

  // Original-vertex ids for induced subgraphs; empty means identity.
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);
  int label_of(int v) const { return labels_.empty() ? v : labels_[v]; }

  const std::uint64_t* row(int u) const {
    return bits_.data() + static_cast<std::size_t>(u) * words_;
  }
  int row_words() const { return words_; }

 private:
  int n_;
  int words_;
  Mode mode_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> labels_;
};

// Subgraph induced on `keep`; labels map back to g's original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Keeps each vertex independently with probability p.
Graph bernoulli_sample(const Graph& g, double p, Rng& rng);

// I.i.d. uniform colors over num_classes classes.
Coloring random_coloring(int n, int num_classes, Rng& rng);

// Directed graph keeping exactly the edges from class i to class i+1 mod h,
// oriented that way; everything else (including monochromatic edges) dropped.
Graph layered_graph(const Graph& g, const Coloring& phi);

// Interchange format: header "n mode", then one "u v" pair per line,
// 0-based; undirected files list each edge once.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace cycount
