#include "turan/graph.hpp"

#include <nlohmann/json.hpp>

namespace turan {

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> keep = s.to_vector();
  std::vector<int> relabel(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = (int)i;
  Graph h((int)keep.size());
  for (int v : keep) {
    (g.neighbors(v) & s).for_each([&](int u) {
      if (u > v) h.add_edge(relabel[v], relabel[u]);
    });
  }
  return h;
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  int n = g.order();
  std::vector<VertexSet> out;
  Bitset seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.test(v) || removed.test(v)) continue;
    VertexSet comp(n);
    std::vector<int> stack{v};
    seen.set(v);
    comp.set(v);
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      ((g.neighbors(w) - removed) - comp).for_each([&](int u) {
        comp.set(u);
        seen.set(u);
        stack.push_back(u);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_without(g, VertexSet(g.order()));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.order() + g2.order() > kMaxVertices)
    throw std::invalid_argument("disjoint_union: capacity exceeded");
  Graph h(g1.order() + g2.order());
  for (int v = 0; v < g1.order(); ++v)
    g1.neighbors(v).for_each([&](int u) {
      if (u > v) h.add_edge(v, u);
    });
  int off = g1.order();
  for (int v = 0; v < g2.order(); ++v)
    g2.neighbors(v).for_each([&](int u) {
      if (u > v) h.add_edge(v + off, u + off);
    });
  return h;
}

Graph join(Graph g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw std::invalid_argument("join: overlapping sets");
  a.for_each([&](int u) { b.for_each([&](int v) { g.add_edge(u, v); }); });
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

std::string to_json_adjacency(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto adj = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v).to_vector());
  j["adj"] = adj;
  return j.dump();
}

}  // namespace turan
