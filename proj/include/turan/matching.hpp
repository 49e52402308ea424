// Maximum matching (blossom algorithm), Tutte-Berge certificates, and the
// deficiency inequality  |X| + sum_i floor(|C_i|/2) <= s  over the components
// C_i of G - X, which characterizes matching number at most s.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Matching {
  std::vector<std::pair<int, int>> edges;
  int size() const { return (int)edges.size(); }
};

struct TBWitness {
  VertexSet x_set;
  std::vector<int> component_sizes;  // orders of the components of G - x_set
  int deficiency_value = 0;          // |V| + |X| - odd(G - X)
  std::string to_json() const;
};

// Maximum-cardinality matching. |result| = nu(G).
Matching max_matching(const Graph& g);

int matching_number(const Graph& g);

// True iff `m` is a matching of g (edges present, pairwise disjoint).
bool is_valid_matching(const Graph& g, const Matching& m);

inline constexpr int kTutteBergeCap = 20;  // exhaustive 2^n subset scan
inline constexpr int kXGCap = 16;

// Exhaustive minimizer of |V| + |X| - odd(G - X) over all subsets X.
// Ties resolve to the first subset in ascending bitmask order.
TBWitness tutte_berge_min(const Graph& g);

// Same minimum restricted to the supplied candidate sets (for graphs past the
// exhaustive cap where a good X is known by construction).
TBWitness tutte_berge_min(const Graph& g, const std::vector<VertexSet>& candidates);

// TBWitness fields evaluated at one given X.
TBWitness evaluate_tb_set(const Graph& g, const VertexSet& x_set);

// Left side of the deficiency inequality at X: |X| + sum floor(|C_i|/2).
long long deficiency_sum(const Graph& g, const VertexSet& x_set);

struct BoundedMatchingResult {
  bool bounded = false;
  std::optional<TBWitness> certificate;  // an X satisfying the inequality, when small enough to search
};

// nu(G) <= s?  Certificate attached when bounded and order <= kTutteBergeCap.
BoundedMatchingResult is_matching_bounded(const Graph& g, int s);

struct LargestTBSet {
  int size = 0;        // x(G): max |X| over sets satisfying the inequality; 0 when only X = {} does
  VertexSet witness;   // lexicographically smallest maximizer
};

// Exhaustive x(G). Requires nu(G) <= s (else no X qualifies -> throws) and
// order <= cap.
LargestTBSet largest_tb_set(const Graph& g, int s, int cap = kXGCap);

// Maximum-matching maintenance under single edge insertions and removals,
// for local search. The graph is owned by the caller; notify this object
// after each mutation.
class IncrementalMatching {
 public:
  explicit IncrementalMatching(const Graph& g);

  int nu() const { return nu_; }
  const std::vector<int>& mate() const { return mate_; }

  void edge_added(int u, int v);
  void edge_removed(int u, int v);

  // Vertices missed by at least one maximum matching (outer vertices of the
  // alternating forests grown from every exposed vertex). Cached.
  const VertexSet& avoidable_set();

  // True iff some maximum matching misses both u and v, i.e. adding the edge
  // uv would raise the matching number.
  bool both_avoidable(int u, int v);

 private:
  const Graph* g_;
  std::vector<int> mate_;
  int nu_ = 0;
  bool avoidable_valid_ = false;
  VertexSet avoidable_;

  bool try_augment();
};

}  // namespace turan
