#include "turan/climb.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "turan/forbidden.hpp"
#include "turan/matching.hpp"

namespace turan {

namespace {

struct Climber {
  int n;
  FamilySpec spec;
  ClimbConfig cfg;
  std::mt19937 rng;

  Graph g;
  IncrementalMatching* im = nullptr;
  std::map<std::pair<int, int>, std::uint64_t> tabu_until;
  std::uint64_t steps = 0;

  long long best_value = -1;
  Graph best_graph;

  Climber(int n_, const FamilySpec& sp, const ClimbConfig& c)
      : n(n_), spec(sp), cfg(c), rng(c.rng_seed), g(n_), best_graph(n_) {}

  bool budget_left() const { return steps < cfg.node_budget; }

  // One feasibility probe; counts against the budget.
  bool feasible_add(int u, int v) {
    ++steps;
    if (u == v || g.has_edge(u, v)) return false;
    auto it = tabu_until.find({std::min(u, v), std::max(u, v)});
    if (it != tabu_until.end() && it->second > steps) return false;
    if (spec.matching_s && im->nu() == *spec.matching_s && im->both_avoidable(u, v))
      return false;  // the edge would raise the matching number past s
    if (spec.klt) {
      g.add_edge(u, v);
      bool bad = biclique_through_edge(g, u, v, spec.klt->first, spec.klt->second);
      g.remove_edge(u, v);
      if (bad) return false;
    }
    return true;
  }

  void commit_add(int u, int v) {
    g.add_edge(u, v);
    im->edge_added(u, v);
  }

  void note_best() {
    if (g.size() > best_value) {
      best_value = g.size();
      best_graph = g;
    }
  }

  int random_vertex_biased() {
    // Half the time prefer the higher-degree of three samples, which pulls
    // growth toward hubs; otherwise uniform.
    int u = (int)(rng() % n);
    if (rng() % 2 == 0) {
      for (int k = 0; k < 2; ++k) {
        int w = (int)(rng() % n);
        if (g.degree(w) > g.degree(u)) u = w;
      }
    }
    return u;
  }

  // Adds edges until a full scan finds nothing feasible or budget runs out.
  void climb() {
    int stagnant = 0;
    while (budget_left()) {
      int u = random_vertex_biased();
      int v = (int)(rng() % n);
      if (feasible_add(u, v)) {
        commit_add(u, v);
        note_best();
        stagnant = 0;
        continue;
      }
      if (++stagnant < 2 * n) continue;
      // random probes stalled: deterministic full scan
      bool any = false;
      for (int a = 0; a < n && !any && budget_left(); ++a)
        for (int b = a + 1; b < n && !any; ++b)
          if (feasible_add(a, b)) {
            commit_add(a, b);
            note_best();
            any = true;
          }
      if (!any) return;  // local maximum (or out of budget)
      stagnant = 0;
    }
  }

  void perturb() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      g.neighbors(v).for_each([&](int u) {
        if (u > v) edges.push_back({v, u});
      });
    if (edges.empty()) return;
    for (int k = 0; k < cfg.perturb_edges && !edges.empty(); ++k) {
      std::size_t i = rng() % edges.size();
      auto [a, b] = edges[i];
      edges.erase(edges.begin() + (long)i);
      g.remove_edge(a, b);
      im->edge_removed(a, b);
      tabu_until[{std::min(a, b), std::max(a, b)}] = steps + (std::uint64_t)n;
    }
  }

  void reset_to(const Graph& start) {
    g = start;
    tabu_until.clear();
  }
};

}  // namespace

ClimbResult lower_bound_search(int n, const FamilySpec& spec, const Graph* seed,
                               const ClimbConfig& cfg) {
  FamilySpec norm = spec;
  norm.normalize();
  if (!norm.valid()) throw std::invalid_argument("lower_bound_search: empty spec");
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("lower_bound_search: order out of range");

  Graph start(n);
  if (seed) {
    if (seed->order() != n)
      throw std::invalid_argument("lower_bound_search: seed order mismatch");
    if (norm.klt && !is_biclique_free(*seed, norm.klt->first, norm.klt->second))
      throw std::invalid_argument("lower_bound_search: seed violates the biclique constraint");
    if (norm.matching_s && !is_matching_bounded(*seed, *norm.matching_s).bounded)
      throw std::invalid_argument("lower_bound_search: seed violates the matching bound");
    start = *seed;
  }

  Climber c(n, norm, cfg);
  c.g = start;
  c.best_value = start.size();
  c.best_graph = start;

  int rounds = 0;
  while (c.budget_left()) {
    IncrementalMatching im(c.g);
    c.im = &im;
    c.climb();  // to a local maximum
    if (!c.budget_left()) break;
    ++rounds;
    if (rounds % cfg.rounds_per_restart == 0)
      c.reset_to((rounds / cfg.rounds_per_restart) % 2 == 0 ? start : Graph(n));
    else
      c.perturb();
  }
  ClimbResult r;
  r.value = c.best_value;
  r.witness = c.best_graph;
  r.nodes = c.steps;
  return r;
}

}  // namespace turan
