#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "barricade/graph.hpp"

namespace barricade {

/// Outcome of one randomized property suite.
struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t checked = 0;     // trials whose premise held and were evaluated
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations, human readable

  bool passed() const { return violations == 0; }
};

/// Small random graph with coarse weights and barricades (multiples of 0.5),
/// so threshold ties are common. Node count in [min_nodes, max_nodes].
Graph random_small_graph(std::uint64_t seed, std::size_t min_nodes, std::size_t max_nodes);

/// Every full seed set found by enumeration contains the deficient nodes.
SuiteResult validate_deficient_membership(std::size_t trials, std::uint64_t seed);
/// Adding one edge (or a bidirectional pair) lowers the minimum full seed size by 0 or 1.
/// Draws graphs until `trials` of them had a free pair to connect.
SuiteResult validate_edge_addition(std::size_t trials, std::uint64_t seed);
/// Node-addition lower and upper bounds on the minimum full seed size, for
/// added nodes with positive barricade.
SuiteResult validate_node_addition(std::size_t trials, std::uint64_t seed);
/**
 * Replacement predictions for node additions built to satisfy one of the two
 * premise families. Draws until `trials` additions with a holding premise
 * have been checked or `max_draws` is reached.
 */
SuiteResult validate_replacement(std::size_t trials, std::uint64_t seed, std::size_t max_draws = 100000);

std::vector<SuiteResult> run_all_validators(std::size_t trials, std::uint64_t seed);

}  // namespace barricade
