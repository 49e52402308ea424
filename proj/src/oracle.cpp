#include "turan/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstring>
#include <mutex>
#include <thread>
#include <vector>

#include "turan/forbidden.hpp"
#include "turan/graph6.hpp"
#include "turan/matching.hpp"

namespace turan {

namespace {

using Rows = std::array<std::uint32_t, kOracleHardMax>;

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }
inline int ctz(std::uint32_t x) { return __builtin_ctz(x); }

Graph rows_to_graph(const Rows& adj, int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (std::uint32_t nb = adj[v] & ~((2u << v) - 1); nb; nb &= nb - 1)
      g.add_edge(v, ctz(nb));
  return g;
}

// One augmenting-path search on mask adjacency (contracted BFS). match is
// updated in place on success.
struct MiniMatcher {
  int n = 0;
  std::array<std::int8_t, kOracleHardMax> match;

  void reset(int nn) {
    n = nn;
    match.fill(-1);
  }

  bool find_path(const Rows& adj, int root) {
    std::array<int, kOracleHardMax> p, base, q;
    std::array<char, kOracleHardMax> used{}, blossom{};
    p.fill(-1);
    for (int i = 0; i < n; ++i) base[i] = i;
    int qh = 0, qt = 0;
    used[root] = 1;
    q[qt++] = root;

    auto lca = [&](int a, int b) {
      std::array<char, kOracleHardMax> seen{};
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
    };
    auto mark_path = [&](int v, int b, int child, std::array<char, kOracleHardMax>& in) {
      while (base[v] != b) {
        in[base[v]] = 1;
        in[base[match[v]]] = 1;
        p[v] = child;
        child = match[v];
        v = p[match[v]];
      }
    };

    while (qh < qt) {
      int v = q[qh++];
      for (std::uint32_t nb = adj[v]; nb; nb &= nb - 1) {
        int u = ctz(nb);
        if (base[v] == base[u] || match[v] == u) continue;
        if (u == root || (match[u] != -1 && p[match[u]] != -1)) {
          int curbase = lca(v, u);
          blossom.fill(0);
          mark_path(v, curbase, u, blossom);
          mark_path(u, curbase, v, blossom);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q[qt++] = i;
              }
            }
        } else if (p[u] == -1) {
          p[u] = v;
          if (match[u] == -1) {
            int w = u;
            while (w != -1) {
              int pv = p[w], ppv = match[pv];
              match[w] = pv;
              match[pv] = w;
              w = ppv;
            }
            return true;
          }
          used[match[u]] = 1;
          q[qt++] = match[u];
        }
      }
    }
    return false;
  }

  bool try_augment(const Rows& adj) {
    for (int r = 0; r < n; ++r)
      if (match[r] == -1 && find_path(adj, r)) return true;
    return false;
  }
};

// Does some K_{l,t} copy use the (present) edge (a,b) with a on the l-side?
bool biclique_through_side(const Rows& adj, int a, int b, int l, int t) {
  std::uint32_t cand = adj[b] & ~(1u << a);
  if (l == 1) return popcount(adj[a]) >= t;
  std::array<int, kOracleHardMax> cs;
  int nc = 0;
  for (std::uint32_t m = cand; m; m &= m - 1) cs[nc++] = ctz(m);
  if (nc < l - 1) return false;
  // choose l-1 further horn members among the center's other neighbors
  std::array<int, 4> idx;
  int k = l - 1;
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t common = adj[a];
    for (int i = 0; i < k && common; ++i) common &= adj[cs[idx[i]]];
    if (popcount(common) >= t) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == nc - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool creates_biclique(const Rows& adj, int u, int v, int l, int t) {
  if (biclique_through_side(adj, u, v, l, t)) return true;
  if (l != t && biclique_through_side(adj, v, u, l, t)) return true;
  return false;
}

// Does X satisfy |X| + sum floor(|C_i|/2) <= s on mask adjacency?
bool xg_qualifies(const Rows& adj, std::uint32_t full, std::uint32_t X, int s) {
  std::uint32_t rem = full & ~X;
  long long sum = popcount(X);
  while (rem && sum <= s) {
    std::uint32_t comp = 1u << ctz(rem);
    while (true) {
      std::uint32_t grow = comp;
      for (std::uint32_t m = comp; m; m &= m - 1) grow |= adj[ctz(m)];
      grow &= rem;
      if (grow == comp) break;
      comp = grow;
    }
    rem &= ~comp;
    sum += popcount(comp) / 2;
  }
  return sum <= s;
}

struct Shared {
  std::atomic<long long> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::uint64_t budget = 0;
  std::mutex witness_mu;
  Rows best_rows{};
  bool have_witness = false;

  // by-x mode
  bool by_x = false;
  int s_for_x = 0;
  std::array<std::atomic<long long>, kOracleHardMax + 1> best_x{};
  std::array<Rows, kOracleHardMax + 1> best_x_rows{};
  std::array<bool, kOracleHardMax + 1> have_x{};
};

struct Unit {
  Rows adj{};
  std::array<std::uint8_t, kOracleHardMax> cmp{};  // 0 = EQ, 1 = GT
  std::array<std::int8_t, kOracleHardMax> match{};
  int nu = 0;
  int ecount = 0;
  int depth = 0;
};

struct Searcher {
  int n, m;
  int kl = 0, kt = 0;  // 0 = no biclique constraint
  int s = -1;          // -1 = no matching constraint
  std::array<std::uint8_t, 128> eu{}, ev{};
  Shared* shared = nullptr;

  Rows adj{};
  std::array<std::uint8_t, kOracleHardMax> cmp{};
  MiniMatcher mm;
  int nu = 0;
  int ecount = 0;
  std::uint64_t local_nodes = 0;

  // unit collection mode
  std::vector<Unit>* collect = nullptr;
  int collect_depth = 0;

  // subset buckets for x(G) leaf evaluation, grouped by size
  std::vector<std::vector<std::uint32_t>> xg_buckets;

  Searcher(int n_, const FamilySpec& spec) : n(n_) {
    m = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        eu[m] = (std::uint8_t)u;
        ev[m] = (std::uint8_t)v;
        ++m;
      }
    if (spec.klt) {
      kl = spec.klt->first;
      kt = spec.klt->second;
    }
    if (spec.matching_s) s = *spec.matching_s;
    mm.reset(n);
  }

  void load(const Unit& un) {
    adj = un.adj;
    cmp = un.cmp;
    mm.match = un.match;
    nu = un.nu;
    ecount = un.ecount;
  }

  bool out_of_budget() {
    if (shared->stop.load(std::memory_order_relaxed)) return true;
    if (++local_nodes % 1024 == 0) {
      std::uint64_t total =
          shared->nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
      if (shared->budget && total > shared->budget) {
        shared->stop.store(true, std::memory_order_relaxed);
        return true;
      }
    }
    return false;
  }

  long long prune_floor() const {
    if (!shared->by_x) return shared->best.load(std::memory_order_relaxed);
    long long mn = shared->best_x[0].load(std::memory_order_relaxed);
    for (int x = 1; x <= shared->s_for_x; ++x)
      mn = std::min(mn, shared->best_x[x].load(std::memory_order_relaxed));
    return mn;
  }

  void record_leaf() {
    if (!shared->by_x) {
      long long cur = shared->best.load(std::memory_order_relaxed);
      while (ecount > cur &&
             !shared->best.compare_exchange_weak(cur, ecount, std::memory_order_relaxed)) {
      }
      if (ecount > cur) {
        std::lock_guard<std::mutex> lk(shared->witness_mu);
        if (ecount >= shared->best.load(std::memory_order_relaxed)) {
          shared->best_rows = adj;
          shared->have_witness = true;
        }
      }
      return;
    }
    if (ecount <= prune_floor()) return;  // cannot improve any class
    int xg = leaf_xg();
    assert(xg >= 0 && xg <= shared->s_for_x);
    auto& slot = shared->best_x[xg];
    long long cur = slot.load(std::memory_order_relaxed);
    while (ecount > cur &&
           !slot.compare_exchange_weak(cur, ecount, std::memory_order_relaxed)) {
    }
    if (ecount > cur) {
      std::lock_guard<std::mutex> lk(shared->witness_mu);
      if (ecount >= slot.load(std::memory_order_relaxed)) {
        shared->best_x_rows[xg] = adj;
        shared->have_x[xg] = true;
      }
    }
  }

  // x(G) of the completed graph, scanning subset sizes downward so the
  // common sparse case resolves on the first bucket.
  int leaf_xg() {
    int smax = shared->s_for_x;
    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    if (xg_buckets.empty()) {
      xg_buckets.assign(smax + 1, {});
      for (std::uint32_t X = 0;; ++X) {
        int pc = popcount(X);
        if (pc <= smax) xg_buckets[pc].push_back(X);
        if (X == full) break;
      }
    }
    for (int xc = smax; xc >= 0; --xc)
      for (std::uint32_t X : xg_buckets[xc])
        if (xg_qualifies(adj, full, X, s)) return xc;
    return -1;
  }

  // Canonicity bookkeeping for deciding edge (u,v) := b. Returns false when
  // the swapped labeling would be lexicographically larger (prune). Saved
  // generator states go into g1/g2 slots for undo (-1 = untouched).
  bool apply_canon(int u, int v, int b, int& t1, int& t2) {
    t1 = t2 = -1;
    if (u <= v - 2 && cmp[v - 1] == 0) {  // row compare, rows v-1 vs v
      int prior = (adj[v - 1] >> u) & 1;
      if (prior < b) return false;
      if (prior > b) {
        cmp[v - 1] = 1;
        t1 = v - 1;
      }
    }
    if (u >= 1 && cmp[u - 1] == 0) {  // column bit pair (u-1, u) in column v
      int prior = (adj[v] >> (u - 1)) & 1;
      if (prior < b) {
        if (t1 >= 0) cmp[t1] = 0;
        return false;
      }
      if (prior > b) {
        cmp[u - 1] = 1;
        t2 = u - 1;
      }
    }
    return true;
  }
  void undo_canon(int t1, int t2) {
    if (t1 >= 0) cmp[t1] = 0;
    if (t2 >= 0) cmp[t2] = 0;
  }

  void dfs(int idx) {
    if (out_of_budget()) return;
    if (ecount + (m - idx) <= prune_floor()) return;
    if (collect && idx == collect_depth) {
      Unit un;
      un.adj = adj;
      un.cmp = cmp;
      un.match = mm.match;
      un.nu = nu;
      un.ecount = ecount;
      un.depth = idx;
      collect->push_back(std::move(un));
      return;
    }
    if (idx == m) {
      record_leaf();
      return;
    }
    int u = eu[idx], v = ev[idx];

    // include first: dense incumbents early
    int t1, t2;
    if (apply_canon(u, v, 1, t1, t2)) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
      bool ok = !(kl && creates_biclique(adj, u, v, kl, kt));
      std::array<std::int8_t, kOracleHardMax> saved_match{};
      int saved_nu = nu;
      bool touched_matching = false;
      if (ok && s >= 0) {
        saved_match = mm.match;
        touched_matching = true;
        if (mm.match[u] == -1 && mm.match[v] == -1) {
          mm.match[u] = (std::int8_t)v;
          mm.match[v] = (std::int8_t)u;
          ++nu;
        } else if (mm.try_augment(adj)) {
          ++nu;
        }
        if (nu > s) ok = false;
      }
      if (ok) {
        ++ecount;
        dfs(idx + 1);
        --ecount;
      }
      if (touched_matching) {
        mm.match = saved_match;
        nu = saved_nu;
      }
      adj[u] &= ~(1u << v);
      adj[v] &= ~(1u << u);
      undo_canon(t1, t2);
    }

    if (apply_canon(u, v, 0, t1, t2)) {
      dfs(idx + 1);
      undo_canon(t1, t2);
    }
  }

  void flush_nodes() { shared->nodes.fetch_add(local_nodes % 1024, std::memory_order_relaxed); }
};

void run_search(int n, const FamilySpec& spec, const SearchConfig& cfg, Shared& shared) {
  Searcher proto(n, spec);
  proto.shared = &shared;
  shared.budget = cfg.node_budget;

  int workers = std::max(1, cfg.workers);
  if (workers == 1 || proto.m <= 8) {
    proto.dfs(0);
    proto.flush_nodes();
    return;
  }

  // Parallel: fix the first K edge decisions into work units.
  int target_units = 64 * workers;
  int depth = 1;
  while (depth < proto.m - 1 && (1 << depth) < target_units) ++depth;
  std::vector<Unit> units;
  proto.collect = &units;
  proto.collect_depth = depth;
  proto.dfs(0);
  proto.flush_nodes();
  proto.collect = nullptr;

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    Searcher w(n, spec);
    w.shared = &shared;
    while (true) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= units.size() || shared.stop.load(std::memory_order_relaxed)) break;
      w.load(units[i]);
      w.dfs(units[i].depth);
    }
    w.flush_nodes();
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace

int default_cap(const FamilySpec& spec) {
  if (!spec.klt) return 10;
  if (spec.klt->first == 2 && spec.klt->second == 2) return 10;
  return 9;
}

int default_restricted_cap() { return 9; }

OracleResult exact_ex(int n, const FamilySpec& spec, const SearchConfig& cfg) {
  FamilySpec norm = spec;
  norm.normalize();
  if (!norm.valid()) throw std::invalid_argument("exact_ex: empty family spec");
  if (n < 0 || n > kOracleHardMax)
    throw std::invalid_argument("exact_ex: order out of range");
  // Too few vertices to host the biclique: the complete graph answers
  // directly, no search needed.
  if (norm.klt && !norm.matching_s && n <= norm.klt->first + norm.klt->second - 1) {
    OracleResult res;
    res.witness = complete_graph(n);
    res.value = res.witness.size();
    return res;
  }

  int cap = std::max(default_cap(norm), cfg.cap_override);
  if (n > cap && cfg.node_budget == 0)
    throw std::invalid_argument("exact_ex: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap) +
                                " (set a node budget or cap override)");

  Shared shared;
  shared.best.store(cfg.initial_lower - 1);
  run_search(n, norm, cfg, shared);

  OracleResult res;
  res.nodes = shared.nodes.load();
  res.exact = !shared.stop.load();
  if (shared.have_witness) {
    res.value = shared.best.load();
    res.witness = rows_to_graph(shared.best_rows, n);
  } else if (!res.exact) {
    // Budget ran out before anything beat the seed; report the weak but
    // honest floor.
    res.value = 0;
    res.witness = Graph(n);
  } else if (cfg.initial_lower <= 0) {
    res.value = 0;
    res.witness = Graph(n);
  } else {
    throw std::logic_error("exact_ex: the caller's lower bound was never matched");
  }
  return res;
}

std::map<int, OracleResult> exact_ex_by_x(int n, const FamilySpec& spec,
                                          const SearchConfig& cfg) {
  FamilySpec norm = spec;
  norm.normalize();
  if (!norm.klt || !norm.matching_s)
    throw std::invalid_argument("exact_ex_by_x: both constraints required");
  if (n < 0 || n > kOracleHardMax)
    throw std::invalid_argument("exact_ex_by_x: order out of range");
  int cap = std::max(default_restricted_cap(), cfg.cap_override);
  if (n > cap && cfg.node_budget == 0)
    throw std::invalid_argument("exact_ex_by_x: n exceeds cap " + std::to_string(cap));

  Shared shared;
  shared.by_x = true;
  shared.s_for_x = std::min(*norm.matching_s, n);
  for (int x = 0; x <= kOracleHardMax; ++x) shared.best_x[x].store(-1);
  run_search(n, norm, cfg, shared);

  std::map<int, OracleResult> out;
  for (int x = 0; x <= shared.s_for_x; ++x) {
    if (!shared.have_x[x]) {
      // The empty graph (and any graph the pruning skipped only because it
      // could not beat an incumbent) may still realize this class; classes
      // are reported only when a witness was recorded.
      if (shared.best_x[x].load() >= 0)
        throw std::logic_error("exact_ex_by_x: value without witness");
      continue;
    }
    OracleResult r;
    r.value = shared.best_x[x].load();
    r.witness = rows_to_graph(shared.best_x_rows[x], n);
    r.exact = !shared.stop.load();
    r.nodes = shared.nodes.load();
    out[x] = std::move(r);
  }
  return out;
}

std::optional<OracleResult> exact_ex_restricted(int n, const FamilySpec& spec, int x,
                                                const SearchConfig& cfg) {
  auto all = exact_ex_by_x(n, spec, cfg);
  auto it = all.find(x);
  if (it == all.end()) return std::nullopt;
  return it->second;
}

int table_fill(ExTable& table, int n_from, int n_to, const FamilySpec& spec,
               const SearchConfig& cfg) {
  FamilySpec norm = spec;
  norm.normalize();
  int solved = 0;
  long long prev = -1;
  for (int n = std::max(0, n_from); n <= n_to; ++n) {
    auto existing = table.find(n, norm);
    if (existing && existing->exact) {
      prev = existing->value;
      continue;
    }
    SearchConfig c = cfg;
    c.initial_lower = std::max(c.initial_lower, prev);  // monotone in n
    OracleResult r = exact_ex(n, norm, c);
    TableEntry e;
    e.value = r.value;
    e.exact = r.exact;
    e.witness_g6 = to_graph6(r.witness);
    e.node_count = r.nodes;
    e.timestamp = current_timestamp_utc();
    table.upsert(n, norm, std::nullopt, e);
    if (r.exact) prev = r.value;
    ++solved;
  }
  return solved;
}

}  // namespace turan
