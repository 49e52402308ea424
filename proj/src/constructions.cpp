#include "turan/constructions.hpp"

#include <nlohmann/json.hpp>

#include "turan/forbidden.hpp"
#include "turan/intmath.hpp"

namespace turan {

long long ConstructionParams::n_of_x() const {
  return x + (long long)(t - 1) * binom(x, l) + 2LL * (s - x) + 1;
}

void ConstructionParams::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("construction params: " + msg); };
  if (l < 2) fail("l >= 2 required, got l = " + std::to_string(l));
  if (t < l) fail("t >= l required, got t = " + std::to_string(t) + " < l = " + std::to_string(l));
  if (x < l) fail("x >= l required, got x = " + std::to_string(x));
  if (s < x) fail("s >= x required, got s = " + std::to_string(s));
  if (s < l + 1) fail("s >= l + 1 required, got s = " + std::to_string(s));
  if (variant == Variant::G1 && 2 * (s - x) + 1 > t)
    fail("g1 needs 2(s-x)+1 <= t; got 2(s-x)+1 = " + std::to_string(2 * (s - x) + 1));
  if (variant == Variant::G2 && 2 * (s - x) + 1 < t + 1)
    fail("g2 needs 2(s-x)+1 >= t+1; got 2(s-x)+1 = " + std::to_string(2 * (s - x) + 1));
  if (n < 2LL * s + 1)
    fail("n >= 2s+1 required, got n = " + std::to_string(n) + " < " + std::to_string(2 * s + 1));
  if (n < n_of_x())
    fail("n >= n(x) = " + std::to_string(n_of_x()) + " required, got n = " + std::to_string(n));
  if (n > kMaxVertices) fail("n exceeds capacity cap");
}

std::string Layout::to_json() const {
  nlohmann::json j;
  j["X"] = x_set.to_vector();
  j["F0"] = f0.to_vector();
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    nlohmann::json b;
    b["F"] = block_f[i];
    b["vertices"] = blocks[i].to_vector();
    arr.push_back(b);
  }
  j["blocks"] = arr;
  j["S"] = s_set.to_vector();
  j["U"] = u_set.to_vector();
  return j.dump();
}

Graph extremal_star_free(int order, int l) {
  if (order < 1 || l < 2) throw std::invalid_argument("extremal_star_free: order >= 1, l >= 2");
  if (order <= l - 1) return complete_graph(order);
  int d = l - 1;
  Graph g(order);
  for (int off = 1; off <= d / 2; ++off)
    for (int v = 0; v < order; ++v) g.add_edge(v, (v + off) % order);
  if (d % 2 == 1) {
    if (order % 2 == 0) {
      for (int v = 0; v < order / 2; ++v) g.add_edge(v, v + order / 2);
    } else {
      // near-perfect matching on 1..order-1; vertex 0 stays at degree l-2
      for (int v = 1; v <= (order - 1) / 2; ++v) g.add_edge(v, v + (order - 1) / 2);
    }
  }
  return g;
}

namespace {

struct Skeleton {
  Graph graph;
  Layout layout;
  int s_begin = 0;  // first S vertex
};

// Common part of both variants: X core, the V_F blocks, U attached to F0.
// S vertices are allocated but left empty.
Skeleton build_skeleton(const ConstructionParams& p) {
  const int x = p.x, l = p.l, t = p.t, s = p.s;
  const int n = (int)p.n;
  const int s_size = 2 * (s - x) + 1;

  Skeleton sk{Graph(n), Layout{}, 0};
  Graph& g = sk.graph;
  Layout& lay = sk.layout;

  Graph core = extremal_star_free(x, l);
  for (int v = 0; v < x; ++v)
    core.neighbors(v).for_each([&](int u) {
      if (u > v) g.add_edge(v, u);
    });

  lay.x_set = VertexSet(n);
  for (int v = 0; v < x; ++v) lay.x_set.set(v);
  lay.f0 = VertexSet(n);
  for (int v = 0; v < l - 1; ++v) lay.f0.set(v);

  int cursor = x;
  for_each_combination(x, l, [&](const std::vector<int>& f) {
    VertexSet block(n);
    for (int i = 0; i < t - 1; ++i) {
      int b = cursor++;
      block.set(b);
      for (int v : f) g.add_edge(b, v);
    }
    lay.block_f.push_back(f);
    lay.blocks.push_back(std::move(block));
    return true;
  });

  sk.s_begin = cursor;
  lay.s_set = VertexSet(n);
  for (int i = 0; i < s_size; ++i) lay.s_set.set(cursor + i);
  cursor += s_size;

  lay.u_set = VertexSet(n);
  for (int v = cursor; v < n; ++v) {
    lay.u_set.set(v);
    lay.f0.for_each([&](int f) { g.add_edge(v, f); });
  }
  return sk;
}

}  // namespace

LabeledConstruction build_g1(const ConstructionParams& p) {
  ConstructionParams q = p;
  q.variant = Variant::G1;
  q.validate();
  Skeleton sk = build_skeleton(q);
  // S is a clique here (its order is at most t) and is joined to F0.
  int s_size = 2 * (q.s - q.x) + 1;
  for (int i = 0; i < s_size; ++i)
    for (int j = i + 1; j < s_size; ++j)
      sk.graph.add_edge(sk.s_begin + i, sk.s_begin + j);
  sk.graph = join(std::move(sk.graph), sk.layout.s_set, sk.layout.f0);
  return {std::move(sk.graph), std::move(sk.layout)};
}

LabeledConstruction build_g2(const ConstructionParams& p, const Graph& s_piece) {
  ConstructionParams q = p;
  q.variant = Variant::G2;
  q.validate();
  int s_size = 2 * (q.s - q.x) + 1;
  if (s_piece.order() != s_size)
    throw std::invalid_argument("build_g2: s_piece must have 2(s-x)+1 = " +
                                std::to_string(s_size) + " vertices, got " +
                                std::to_string(s_piece.order()));
  if (!is_biclique_free(s_piece, q.l, q.t))
    throw std::invalid_argument("build_g2: s_piece contains a forbidden biclique");
  Skeleton sk = build_skeleton(q);
  for (int v = 0; v < s_size; ++v)
    s_piece.neighbors(v).for_each([&](int u) {
      if (u > v) sk.graph.add_edge(sk.s_begin + v, sk.s_begin + u);
    });
  return {std::move(sk.graph), std::move(sk.layout)};
}

Graph splice(const Graph& g1, int u1, const Graph& g2, int u2) {
  if (u1 < 0 || u1 >= g1.order() || u2 < 0 || u2 >= g2.order())
    throw std::out_of_range("splice: vertex out of range");
  Graph h(g1.order() + g2.order() - 1);
  for (int v = 0; v < g1.order(); ++v)
    g1.neighbors(v).for_each([&](int u) {
      if (u > v) h.add_edge(v, u);
    });
  auto map2 = [&](int v) {
    if (v == u2) return u1;
    return g1.order() + (v < u2 ? v : v - 1);
  };
  for (int v = 0; v < g2.order(); ++v)
    g2.neighbors(v).for_each([&](int u) {
      if (u > v) h.add_edge(map2(v), map2(u));
    });
  return h;
}

Graph complete_split(int small_side, int n) {
  if (small_side < 1 || n <= small_side)
    throw std::invalid_argument("complete_split: need n > small_side >= 1");
  return complete_bipartite(small_side, n - small_side);
}

int augment_g2_xs_edges(LabeledConstruction& c, int l, int t) {
  int added = 0;
  std::vector<int> xs = c.layout.x_set.to_vector();
  std::vector<int> ss = c.layout.s_set.to_vector();
  for (int xv : xs)
    for (int sv : ss) {
      if (c.graph.has_edge(xv, sv)) continue;
      c.graph.add_edge(xv, sv);
      if (is_biclique_free(c.graph, l, t)) {
        ++added;
      } else {
        c.graph.remove_edge(xv, sv);
      }
    }
  return added;
}

}  // namespace turan
