// Exact Turan-number search by branch and bound over the edge slots of K_n
// in column-major order. Pruning: incumbent (current edges + remaining slots
// cannot beat the best), labeling canonicity under adjacent vertex swaps, and
// incremental constraint checks (a new edge can only complete a biclique
// through its endpoints; the matching number rises by at most one per edge).
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "turan/extable.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kOracleHardMax = 16;

struct SearchConfig {
  int workers = 1;
  std::uint64_t node_budget = 0;  // 0 = unlimited; else best-effort, result may be lower-only
  long long initial_lower = -1;   // edge count known to be achievable
  int cap_override = 0;           // raise the default order cap deliberately
};

struct OracleResult {
  long long value = 0;
  Graph witness;
  bool exact = true;  // false when the node budget ran out
  std::uint64_t nodes = 0;
};

// Default order caps: 10 when the biclique constraint is absent or K_{2,2},
// 9 otherwise; restricted sweeps default to 9.
int default_cap(const FamilySpec& spec);
int default_restricted_cap();

// Exact maximum edge count over n-vertex graphs satisfying the family spec.
// Throws if n exceeds the cap and neither a budget nor a cap override is
// given.
OracleResult exact_ex(int n, const FamilySpec& spec, const SearchConfig& cfg = {});

// Per-class values: for each realizable x in 0..s, the maximum edge count
// over spec-satisfying graphs whose largest qualifying deficiency set has
// size exactly x. Requires both constraints.
std::map<int, OracleResult> exact_ex_by_x(int n, const FamilySpec& spec,
                                          const SearchConfig& cfg = {});

// One class of the above; nothing if the class is empty.
std::optional<OracleResult> exact_ex_restricted(int n, const FamilySpec& spec, int x,
                                                const SearchConfig& cfg = {});

// Runs exact_ex over [n_from, n_to], seeding each run with the previous
// value and persisting entries; present exact entries are skipped. Returns
// how many instances were newly solved.
int table_fill(ExTable& table, int n_from, int n_to, const FamilySpec& spec,
               const SearchConfig& cfg = {});

}  // namespace turan
