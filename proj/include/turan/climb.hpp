// Lower-bound search at any order: edge-add hill climbing with random
// restarts and a tabu list on removed edges. Never claims optimality.
#pragma once

#include <cstdint>

#include "turan/extable.hpp"
#include "turan/graph.hpp"

namespace turan {

struct ClimbConfig {
  std::uint64_t node_budget = 1000000;  // candidate feasibility evaluations
  std::uint32_t rng_seed = 1;
  int perturb_edges = 2;       // edges removed per perturbation
  int rounds_per_restart = 60; // stagnant perturbation rounds before restarting
};

struct ClimbResult {
  long long value = 0;
  Graph witness;
  std::uint64_t nodes = 0;
};

// Starts from `seed` when given (must satisfy the spec), else from the empty
// graph. Deterministic for a fixed config.
ClimbResult lower_bound_search(int n, const FamilySpec& spec, const Graph* seed,
                               const ClimbConfig& cfg = {});

}  // namespace turan
