// Compact undirected simple graph: dense 0-based vertex labels, one bitset
// row per vertex. Symmetry and irreflexivity are enforced by construction;
// loops and multi-edges are unrepresentable.
//
// Graphs are plain values: mutate only exclusively-owned instances, share
// const references freely across threads. No interior locking.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

#ifndef TURAN_MAX_VERTICES
inline constexpr int kMaxVertices = 4096;
#else
inline constexpr int kMaxVertices = TURAN_MAX_VERTICES;
#endif

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return n_; }
  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }

  // First set bit, or -1.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  // First set bit strictly after i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t wi = (std::size_t)(i >> 6);
    std::uint64_t x = w_[wi] & (~0ULL << (i & 63));
    while (true) {
      if (x) return (int)(wi * 64 + __builtin_ctzll(x));
      if (++wi >= w_.size()) return -1;
      x = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        f((int)(i * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

using VertexSet = Bitset;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order out of range (cap " +
                                  std::to_string(kMaxVertices) + ")");
  }

  int order() const { return n_; }
  long long size() const { return m_; }  // e(G)

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
  }

  // Idempotent; rejects loops and out-of-range vertices.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: loop rejected");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --m_;
  }

  const Bitset& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return neighbors(v).count(); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
    return d;
  }

  VertexSet full_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;
};

// Subgraph induced by s, vertices relabeled 0..|s|-1 in increasing label order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Connected components, each reported once, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Components of g - removed (vertices of `removed` excluded entirely).
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

// Vertex-disjoint union: g2's vertices are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Adds all edges between a and b. The sets must be disjoint.
Graph join(Graph g, const VertexSet& a, const VertexSet& b);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // part A = 0..a-1, part B = a..a+b-1
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center = 0
Graph petersen_graph();

// Debug JSON: {"n": ..., "adj": [[..], ..]}
std::string to_json_adjacency(const Graph& g);

}  // namespace turan
