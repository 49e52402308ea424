// Builders for the extremal graphs: the g1/g2 families (a star-free core X,
// one block of t-1 shared neighbors per l-subset of X, a clique or free piece
// S, filler U), the one-vertex splice, and small extremal pieces.
//
// Vertex layout is fixed for reproducible certificates:
//   X = 0..x-1, then the V_F blocks in lexicographic F order, then S, then U.
#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class Variant { G1, G2 };

struct ConstructionParams {
  int l = 0, t = 0, s = 0, x = 0;
  long long n = 0;
  Variant variant = Variant::G1;

  long long n_of_x() const;  // x + (t-1) C(x,l) + 2(s-x) + 1
  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct Layout {
  VertexSet x_set;                       // the core X
  VertexSet f0;                          // the l-1 join vertices, first of X
  std::vector<std::vector<int>> block_f; // per block: the l-subset F of X
  std::vector<VertexSet> blocks;         // per block: its t-1 vertices
  VertexSet s_set;
  VertexSet u_set;
  std::string to_json() const;
};

struct LabeledConstruction {
  Graph graph;
  Layout layout;
};

// Extremal K_{1,l}-free graph on `order` vertices: circulant of degree l-1,
// with the antipodal matching when l-1 is odd; when both l-1 and the order
// are odd, vertex 0 is the one of degree l-2. Orders below l fall back to the
// complete graph (the true extremum there).
Graph extremal_star_free(int order, int l);

LabeledConstruction build_g1(const ConstructionParams& p);

// As g1 but S has no edges to X and is the caller-supplied piece, which must
// be K_{l,t}-free on 2(s-x)+1 vertices (checked).
LabeledConstruction build_g2(const ConstructionParams& p, const Graph& s_piece);

// Identify u2 with u1: result on |V1|+|V2|-1 vertices, u2's edges redirected
// to u1. Edge counts add.
Graph splice(const Graph& g1, int u1, const Graph& g2, int u2);

// K_{small_side, n - small_side}.
Graph complete_split(int small_side, int n);

// Experimental improver for g2 (beyond the family's guarantee): greedily adds
// X-S edges while K_{l,t}-freeness survives; the matching bound is unaffected
// because the components of G - X do not change. Returns how many edges were
// added.
int augment_g2_xs_edges(LabeledConstruction& c, int l, int t);

}  // namespace turan
