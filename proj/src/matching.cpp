#include "turan/matching.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace turan {

namespace {

// Contracted-BFS augmenting path search (Edmonds). Returns 1 and flips the
// path if an augmenting path from root exists. `alive` restricts the search
// to a vertex subset.
struct BlossomSearch {
  const Graph& g;
  int n;
  std::vector<int> match, p, base;
  std::vector<char> used, blossom;
  std::vector<int> q;
  Bitset alive;

  explicit BlossomSearch(const Graph& graph)
      : g(graph),
        n(graph.order()),
        match(n, -1),
        p(n, -1),
        base(n),
        used(n, 0),
        blossom(n, 0),
        alive(graph.full_set()) {}

  int lca(int a, int b) {
    std::vector<char> seen(n, 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  bool find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    q.clear();
    q.push_back(root);
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      bool augmented = false;
      int aug_at = -1;
      (g.neighbors(v) & alive).for_each([&](int u) {
        if (augmented) return;
        if (base[v] == base[u] || match[v] == u) return;
        if (u == root || (match[u] != -1 && p[match[u]] != -1)) {
          int curbase = lca(v, u);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, curbase, u);
          mark_path(u, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push_back(i);
              }
            }
        } else if (p[u] == -1) {
          p[u] = v;
          if (match[u] == -1) {
            augmented = true;
            aug_at = u;
          } else {
            used[match[u]] = 1;
            q.push_back(match[u]);
          }
        }
      });
      if (augmented) {
        int u = aug_at;
        while (u != -1) {
          int pv = p[u], ppv = match[pv];
          match[u] = pv;
          match[pv] = u;
          u = ppv;
        }
        return true;
      }
    }
    return false;
  }

  // Runs to a maximum matching; if early_stop >= 0, aborts as soon as the
  // matching size exceeds early_stop. Returns the matching size.
  int run(int early_stop = -1) {
    int size = 0;
    for (int v = 0; v < n; ++v) {  // greedy seed
      if (match[v] != -1 || !alive.test(v)) continue;
      Bitset cand = g.neighbors(v) & alive;
      int u = cand.first();
      while (u != -1 && match[u] != -1) u = cand.next(u);
      if (u != -1) {
        match[v] = u;
        match[u] = v;
        ++size;
        if (early_stop >= 0 && size > early_stop) return size;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1 || !alive.test(v)) continue;
      if (find_path(v)) {
        ++size;
        if (early_stop >= 0 && size > early_stop) return size;
      }
    }
    return size;
  }
};

Matching matching_from(const std::vector<int>& match) {
  Matching m;
  for (int v = 0; v < (int)match.size(); ++v)
    if (match[v] > v) m.edges.emplace_back(v, match[v]);
  return m;
}

}  // namespace

Matching max_matching(const Graph& g) {
  BlossomSearch bs(g);
  bs.run();
  return matching_from(bs.match);
}

int matching_number(const Graph& g) {
  BlossomSearch bs(g);
  return bs.run();
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  Bitset seen(g.order());
  for (auto [u, v] : m.edges) {
    if (!g.has_edge(u, v)) return false;
    if (seen.test(u) || seen.test(v)) return false;
    seen.set(u);
    seen.set(v);
  }
  return true;
}

std::string TBWitness::to_json() const {
  nlohmann::json j;
  j["x_set"] = x_set.to_vector();
  j["component_sizes"] = component_sizes;
  j["deficiency"] = deficiency_value;
  return j.dump();
}

TBWitness evaluate_tb_set(const Graph& g, const VertexSet& x_set) {
  TBWitness w;
  w.x_set = x_set;
  int odd = 0;
  for (const auto& comp : components_without(g, x_set)) {
    int c = comp.count();
    w.component_sizes.push_back(c);
    if (c % 2 == 1) ++odd;
  }
  w.deficiency_value = g.order() + x_set.count() - odd;
  return w;
}

long long deficiency_sum(const Graph& g, const VertexSet& x_set) {
  long long total = x_set.count();
  for (const auto& comp : components_without(g, x_set)) total += comp.count() / 2;
  return total;
}

namespace {

TBWitness best_of(const Graph& g, const std::vector<VertexSet>& candidates) {
  std::optional<TBWitness> best;
  for (const auto& x : candidates) {
    TBWitness w = evaluate_tb_set(g, x);
    if (!best || w.deficiency_value < best->deficiency_value) best = std::move(w);
  }
  if (!best) throw std::invalid_argument("tutte_berge_min: no candidate sets");
  return *best;
}

}  // namespace

TBWitness tutte_berge_min(const Graph& g) {
  int n = g.order();
  if (n > kTutteBergeCap)
    throw std::invalid_argument("tutte_berge_min: order exceeds exhaustive cap " +
                                std::to_string(kTutteBergeCap));
  std::optional<TBWitness> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet x(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) x.set(v);
    TBWitness w = evaluate_tb_set(g, x);
    if (!best || w.deficiency_value < best->deficiency_value) best = std::move(w);
  }
  return *best;
}

TBWitness tutte_berge_min(const Graph& g, const std::vector<VertexSet>& candidates) {
  return best_of(g, candidates);
}

BoundedMatchingResult is_matching_bounded(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("is_matching_bounded: s < 0");
  BoundedMatchingResult r;
  BlossomSearch bs(g);
  int nu = bs.run(s);
  r.bounded = nu <= s;
  if (r.bounded && g.order() <= kTutteBergeCap) {
    TBWitness w = tutte_berge_min(g);
    // The minimizing X satisfies the deficiency inequality when nu <= s.
    r.certificate = std::move(w);
  }
  return r;
}

IncrementalMatching::IncrementalMatching(const Graph& g) : g_(&g), avoidable_(g.order()) {
  BlossomSearch bs(g);
  nu_ = bs.run();
  mate_ = std::move(bs.match);
}

bool IncrementalMatching::try_augment() {
  BlossomSearch bs(*g_);
  bs.match = mate_;
  for (int v = 0; v < g_->order(); ++v) {
    if (bs.match[v] != -1) continue;
    if (bs.find_path(v)) {
      mate_ = std::move(bs.match);
      return true;
    }
  }
  return false;
}

void IncrementalMatching::edge_added(int u, int v) {
  avoidable_valid_ = false;
  if (mate_[u] == -1 && mate_[v] == -1) {
    mate_[u] = v;
    mate_[v] = u;
    ++nu_;
    return;
  }
  if (try_augment()) ++nu_;  // the matching number rises by at most one
}

void IncrementalMatching::edge_removed(int u, int v) {
  avoidable_valid_ = false;
  if (mate_[u] != v) return;  // non-matching edge: the matching stays maximum
  mate_[u] = -1;
  mate_[v] = -1;
  if (!try_augment()) --nu_;
}

const VertexSet& IncrementalMatching::avoidable_set() {
  if (avoidable_valid_) return avoidable_;
  avoidable_ = VertexSet(g_->order());
  BlossomSearch bs(*g_);
  bs.match = mate_;
  for (int v = 0; v < g_->order(); ++v) {
    if (bs.match[v] != -1) continue;
    bool aug = bs.find_path(v);
    (void)aug;  // matching is maximum: never augments
    // Outer vertices of the failed forest are exactly those missed by some
    // maximum matching.
    for (int w = 0; w < g_->order(); ++w)
      if (bs.used[w]) avoidable_.set(w);
  }
  avoidable_valid_ = true;
  return avoidable_;
}

bool IncrementalMatching::both_avoidable(int u, int v) {
  if (u == v) return false;
  // The current matching witnesses the common case directly.
  if (mate_[u] == -1 && mate_[v] == -1) return true;
  const VertexSet& d = avoidable_set();
  if (!d.test(u) || !d.test(v)) return false;
  // Exact test: a maximum matching missing both exists iff nu(G - u - v) = nu.
  BlossomSearch bs(*g_);
  bs.alive.reset(u);
  bs.alive.reset(v);
  int size = nu_;
  bs.match = mate_;
  for (int w : {u, v}) {
    int m = bs.match[w];
    if (m != -1) {
      bs.match[m] = -1;
      bs.match[w] = -1;
      --size;
    }
  }
  // Dropped at most two matching edges; re-augment with early exit.
  for (int w = 0; w < g_->order() && size < nu_; ++w) {
    if (w == u || w == v || bs.match[w] != -1) continue;
    if (bs.find_path(w)) ++size;
  }
  return size == nu_;
}

LargestTBSet largest_tb_set(const Graph& g, int s, int cap) {
  int n = g.order();
  if (n > cap)
    throw std::invalid_argument("largest_tb_set: order exceeds cap " +
                                std::to_string(cap));
  std::optional<LargestTBSet> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet x(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) x.set(v);
    if (deficiency_sum(g, x) > s) continue;
    int sz = x.count();
    if (!best || sz > best->size) best = LargestTBSet{sz, std::move(x)};
  }
  if (!best)
    throw std::invalid_argument("largest_tb_set: no qualifying set (matching number exceeds s)");
  return *best;
}

}  // namespace turan
