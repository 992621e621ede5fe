#include "cycount/exact.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "cycount/errors.hpp"

namespace cycount {

namespace {

constexpr std::uint64_t kU64Max = ~0ull;

std::uint64_t narrow_count(u128 v, const char* what) {
  if (v > static_cast<u128>(kU64Max))
    throw overflow_error(std::string(what) + ": count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

// Adjacency blocks A[U_s, U_t] for a fixed family of disjoint classes,
// extracted lazily and shared across the class orders that reuse them.
class BlockCache {
 public:
  BlockCache(const Graph& g, std::vector<VertexSet> classes)
      : g_(g),
        classes_(std::move(classes)),
        h_(static_cast<int>(classes_.size())),
        blocks_(static_cast<std::size_t>(h_) * h_),
        has_(static_cast<std::size_t>(h_) * h_, false) {}

  int num_classes() const { return h_; }
  const VertexSet& cls(int i) const { return classes_[i]; }

  bool any_empty() const {
    for (const auto& c : classes_)
      if (c.empty()) return true;
    return false;
  }

  const CountMatrix& block(int s, int t) {
    const std::size_t i = static_cast<std::size_t>(s) * h_ + t;
    if (!has_[i]) {
      const auto& us = classes_[s].members;
      const auto& ut = classes_[t].members;
      CountMatrix m(static_cast<int>(us.size()), static_cast<int>(ut.size()));
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
          if (g_.has_edge(us[r], ut[c])) m.set(r, c, 1);
      blocks_[i] = std::move(m);
      has_[i] = true;
    }
    return *blocks_[i];
  }

 private:
  const Graph& g_;
  std::vector<VertexSet> classes_;
  int h_;
  std::vector<std::optional<CountMatrix>> blocks_;
  std::vector<bool> has_;
};

int position_of(const VertexSet& cls, int v) {
  auto it = std::lower_bound(cls.members.begin(), cls.members.end(), v);
  return static_cast<int>(it - cls.members.begin());
}

// Accumulates per-vertex ordered-cycle counts for the class order `ord`
// (indices into the cache) into `out`, indexed by graph vertex id.
// Chains are anchored at the smallest class so every product keeps the
// smallest dimension as its row count.
void accumulate_t_sigma(BlockCache& cache, std::vector<int> ord, WorkCounter& wc,
                        std::vector<u128>& out) {
  const int h = static_cast<int>(ord.size());
  for (int i : ord)
    if (cache.cls(i).empty()) return;

  int smallest = 0;
  for (int p = 1; p < h; ++p)
    if (cache.cls(ord[p]).size() < cache.cls(ord[smallest]).size()) smallest = p;
  std::rotate(ord.begin(), ord.begin() + smallest, ord.end());

  // Prefix chains B_i: paths ord[0] -> ... -> ord[i], anchored at ord[0].
  std::vector<CountMatrix> prefix;
  prefix.reserve(h - 1);
  prefix.push_back(cache.block(ord[0], ord[1]));
  for (int i = 2; i < h; ++i)
    prefix.push_back(multiply(prefix.back(), cache.block(ord[i - 1], ord[i]), wc));

  const CountMatrix& closing = cache.block(ord[h - 1], ord[0]);

  // Class ord[0]: diagonal of B_{h-1} * A[ord[h-1], ord[0]].
  {
    const auto diag = diag_product(prefix[h - 2], closing, wc);
    const auto& mem = cache.cls(ord[0]).members;
    for (int r = 0; r < static_cast<int>(mem.size()); ++r) out[mem[r]] += diag[r];
  }

  // Remaining classes via reverse chains C_j: paths ord[0] -> ord[h-1] -> ...
  // -> ord[j] against edge direction. For v in class ord[j] the count is the
  // diagonal of B_{j-1}^T * C_j.
  CountMatrix rev = closing.transposed();
  for (int j = h - 1; j >= 1; --j) {
    const auto diag = diag_product(prefix[j - 1].transposed(), rev, wc);
    const auto& mem = cache.cls(ord[j]).members;
    for (int r = 0; r < static_cast<int>(mem.size()); ++r) out[mem[r]] += diag[r];
    if (j > 1) rev = multiply(rev, cache.block(ord[j - 1], ord[j]).transposed(), wc);
  }
}

// Ordered-cycle count at a single vertex v, whose class must be ord[0].
// Every matrix in the chain is v's row slice, so all shapes are (1, x, y).
u128 t_sigma_at(BlockCache& cache, const std::vector<int>& ord, int v, WorkCounter& wc) {
  const int h = static_cast<int>(ord.size());
  for (int i : ord)
    if (cache.cls(i).empty()) return 0;

  const int vrow = position_of(cache.cls(ord[0]), v);
  const CountMatrix& first = cache.block(ord[0], ord[1]);
  CountMatrix b(1, first.cols());
  for (int c = 0; c < first.cols(); ++c) b.set(0, c, first.at(vrow, c));
  for (int i = 2; i < h; ++i) b = multiply(b, cache.block(ord[i - 1], ord[i]), wc);

  const CountMatrix& closing = cache.block(ord[h - 1], ord[0]);
  CountMatrix col(closing.rows(), 1);
  for (int r = 0; r < closing.rows(); ++r) col.set(r, 0, closing.at(r, vrow));
  return diag_product(b, col, wc)[0];
}

// 2h automorphisms for an undirected h-cycle, h rotations for a directed one.
// Class orders are enumerated with the first class pinned, which already
// quotients out the h rotations; this is the residual divisor.
int automorphism_divisor(Mode mode) { return mode == Mode::undirected ? 2 : 1; }

// Split classes by membership in S according to the weight-k selection mask.
// Returns empty vector when some class the mask requires is empty.
std::vector<VertexSet> masked_classes(const std::vector<VertexSet>& classes,
                                      const VertexSet& S, unsigned mask) {
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    const bool inside = (mask >> i) & 1u;
    VertexSet part;
    for (int v : classes[i].members)
      if (S.contains(v) == inside) part.members.push_back(v);
    if (part.empty()) return {};
    out.push_back(std::move(part));
  }
  return out;
}

void validate_colorful_args(const Graph& g, const Coloring& phi, int k) {
  if (phi.size() != g.size()) throw input_error("coloring size mismatch");
  const int h = phi.num_classes;
  if (h < 3) throw input_error("need at least 3 color classes");
  if (k < 1 || k > h) throw input_error("k must be in [1, h]");
}

}  // namespace

OrderedPartition::OrderedPartition(std::vector<VertexSet> cls) : classes(std::move(cls)) {
  if (num_classes() < 3) throw input_error("OrderedPartition: need h >= 3 classes");
  std::vector<int> all;
  for (const auto& c : classes) all.insert(all.end(), c.members.begin(), c.members.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw input_error("OrderedPartition: classes must be disjoint");
}

std::uint64_t PerVertexCounts::sum() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

CycleCounts brute_force_cycles(const Graph& g, int h, std::uint64_t budget) {
  if (h < 3) throw input_error("brute_force_cycles: h must be >= 3");
  const int n = g.size();
  const bool undirected = g.mode() == Mode::undirected;

  CycleCounts result;
  result.per_vertex.counts.assign(n, 0);
  std::uint64_t visits = 0;

  std::vector<int> path(h);
  std::vector<char> used(n, 0);

  // Anchor each cycle at its minimum vertex; undirected cycles additionally
  // take the direction with path[1] < path[h-1].
  auto extend = [&](auto&& self, int depth) -> void {
    const int last = path[depth - 1];
    if (depth == h) {
      if (g.has_edge(last, path[0])) {
        if (!undirected || path[1] < path[h - 1]) {
          ++result.total;
          if (result.total == 0) throw overflow_error("brute_force_cycles: total overflow");
          for (int i = 0; i < h; ++i) ++result.per_vertex.counts[path[i]];
        }
      }
      return;
    }
    for (int v = path[0] + 1; v < n; ++v) {
      if (used[v] || !g.has_edge(last, v)) continue;
      if (++visits > budget)
        throw budget_error("brute_force_cycles: enumeration budget exceeded (n=" +
                           std::to_string(n) + ", h=" + std::to_string(h) + ")");
      used[v] = 1;
      path[depth] = v;
      self(self, depth + 1);
      used[v] = 0;
    }
  };

  for (int a = 0; a + h <= n; ++a) {
    path[0] = a;
    used[a] = 1;
    extend(extend, 1);
    used[a] = 0;
  }
  return result;
}

PerVertexCounts count_t_sigma(const Graph& g, const OrderedPartition& sigma,
                              WorkCounter& wc) {
  for (const auto& c : sigma.classes)
    for (int v : c.members)
      if (v >= g.size()) throw input_error("count_t_sigma: vertex out of range");

  std::vector<u128> acc(g.size(), 0);
  BlockCache cache(g, sigma.classes);
  std::vector<int> ord(sigma.num_classes());
  std::iota(ord.begin(), ord.end(), 0);
  accumulate_t_sigma(cache, ord, wc, acc);

  PerVertexCounts out;
  out.counts.resize(g.size());
  for (int v = 0; v < g.size(); ++v) out.counts[v] = narrow_count(acc[v], "count_t_sigma");
  return out;
}

PerVertexCounts count_colorful_k(const Graph& g, const Coloring& phi,
                                 const VertexSet& S, int k, WorkCounter& wc) {
  validate_colorful_args(g, phi, k);
  const int h = phi.num_classes;
  const auto classes = phi.classes();
  const int divisor = automorphism_divisor(g.mode());

  std::vector<u128> acc(g.size(), 0);
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    auto parts = masked_classes(classes, S, mask);
    if (parts.empty()) continue;
    BlockCache cache(g, std::move(parts));

    // Orders with the first class pinned; rotations of an order count the
    // same cycles, so this enumerates each rotation class once.
    std::vector<int> ord(h);
    std::iota(ord.begin(), ord.end(), 0);
    do {
      accumulate_t_sigma(cache, ord, wc, acc);
    } while (std::next_permutation(ord.begin() + 1, ord.end()));
  }

  PerVertexCounts out;
  out.counts.resize(g.size());
  for (int v = 0; v < g.size(); ++v) {
    if (acc[v] % divisor != 0)
      throw internal_error("count_colorful_k: automorphism division is inexact");
    out.counts[v] = narrow_count(acc[v] / divisor, "count_colorful_k");
  }
  return out;
}

std::uint64_t count_colorful_k_at(const Graph& g, const Coloring& phi,
                                  const VertexSet& S, int k, int v,
                                  WorkCounter& wc) {
  validate_colorful_args(g, phi, k);
  if (v < 0 || v >= g.size()) throw input_error("count_colorful_k_at: vertex out of range");
  const int h = phi.num_classes;
  const auto classes = phi.classes();
  const int vclass = phi.color[v];
  const int divisor = automorphism_divisor(g.mode());

  u128 acc = 0;
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    if ((((mask >> vclass) & 1u) != 0) != S.contains(v)) continue;  // v not in its part
    auto parts = masked_classes(classes, S, mask);
    if (parts.empty()) continue;
    BlockCache cache(g, std::move(parts));

    std::vector<int> ord(h);
    std::iota(ord.begin(), ord.end(), 0);
    do {
      // Rotate v's class to the front; the count is rotation-invariant.
      std::vector<int> rot = ord;
      auto it = std::find(rot.begin(), rot.end(), vclass);
      std::rotate(rot.begin(), it, rot.end());
      acc += t_sigma_at(cache, rot, v, wc);
    } while (std::next_permutation(ord.begin() + 1, ord.end()));
  }
  if (acc % divisor != 0)
    throw internal_error("count_colorful_k_at: automorphism division is inexact");
  return narrow_count(acc / divisor, "count_colorful_k_at");
}

std::uint64_t count_colorful_total(const Graph& g, const Coloring& phi,
                                   const VertexSet& S, int k, WorkCounter& wc) {
  const auto per_vertex = count_colorful_k(g, phi, S, k, wc);
  u128 sum = 0;
  for (int v : S.members) sum += per_vertex.at(v);
  if (sum % static_cast<unsigned>(k) != 0)
    throw internal_error("count_colorful_total: division by k is inexact");
  return narrow_count(sum / static_cast<unsigned>(k), "count_colorful_total");
}

}  // namespace cycount
