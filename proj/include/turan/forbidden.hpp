// K_{l,t} subgraph detection through l-horns: an l-set T together with the
// set C(T) of its common neighbors. |C(T)| >= t certifies a K_{l,t}.
#pragma once

#include <optional>
#include <string>

#include "turan/graph.hpp"

namespace turan {

struct HornCertificate {
  VertexSet horn;     // |horn| = l
  VertexSet centers;  // common neighbors of the horn, |centers| >= t
  std::string to_json() const;
};

// Common neighborhood of the horn vertices, excluding the horn itself.
VertexSet centers_of(const Graph& g, const VertexSet& horn);

// First certificate in lexicographic horn order, or nothing. Parameters are
// normalized to l <= t (K_{l,t} and K_{t,l} are the same graph). Search
// enumerates l-subsets of the degree->=t vertices, dropping any partial horn
// whose running neighborhood intersection falls below t.
std::optional<HornCertificate> contains_biclique(const Graph& g, int l, int t);

// K_{l,t}-freeness. For l = 1 this is just a max-degree test.
bool is_biclique_free(const Graph& g, int l, int t);

// Re-checks a certificate by adjacency: sizes, disjointness, all cross edges.
bool verify_certificate(const Graph& g, const HornCertificate& cert, int l, int t);

// Does some K_{l,t} copy use the edge (u,v)? The edge must be present. Local
// check for incremental search: a new copy must route through the new edge.
bool biclique_through_edge(const Graph& g, int u, int v, int l, int t);

// sum_v binom(d_X(v), l) over all vertices v: the number of (horn, center)
// incidences with the horn inside x_set.
long long count_horn_incidences(const Graph& g, const VertexSet& x_set, int l);

}  // namespace turan
