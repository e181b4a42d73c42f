#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barricade/graph.hpp"

namespace barricade {

struct SolverReport {
  std::string algorithm;
  SeedSet seeds;
  std::size_t sigma = 0;
  double wall_time_s = 0.0;  // solver body only, excludes the final sigma check
  std::optional<std::uint64_t> rng_seed;
  std::optional<std::vector<NodeId>> removal_sequence;  // mss only, in removal order
};

/**
 * Minimum seed selection for full influenceability.
 *
 * Repeatedly deletes one node that the remaining graph could still activate
 * (barricade <= in-weight from remaining nodes). Among those candidates it
 * keeps, in order, the ones with least total incident weight, then the ones
 * whose deletion leaves the fewest non-trivial weak components, then the ones
 * whose deletion leaves the fewest deficient nodes; the survivor is picked
 * uniformly at random with `rng_seed`. The nodes left when no candidate
 * remains are the seeds, and replaying the deletions backwards is a valid
 * activation order, so the seeds always influence the whole graph.
 */
SolverReport mss(const Graph& graph, std::uint64_t rng_seed);

/// Budgeted selection: starts from mss() and drops the seed whose removal
/// keeps sigma highest (smallest id on ties) until at most k remain.
SolverReport sim(const Graph& graph, std::size_t k, std::uint64_t rng_seed);

/// Hill climbing from the empty set: adds the node with the largest marginal
/// gain (smallest id on ties) min(k, |V|) times.
SolverReport greedy(const Graph& graph, std::size_t k);

/// Hill climbing until every node is active.
SolverReport greedy_full(const Graph& graph);

inline constexpr std::uint64_t kDefaultSubsetBudget = 20'000'000;

/// Best seed set of size min(k, |V|) by enumeration, lexicographically smallest
/// on ties. Throws GuardError beyond max_nodes live nodes or when the number
/// of candidate subsets exceeds max_subsets.
SolverReport optimal_exhaustive(const Graph& graph, std::size_t k, std::size_t max_nodes = 16,
                                std::uint64_t max_subsets = kDefaultSubsetBudget);

/// Exhaustive minimum full seed set wrapped as a report.
SolverReport optimal_full(const Graph& graph, std::size_t max_nodes = 16);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace barricade
