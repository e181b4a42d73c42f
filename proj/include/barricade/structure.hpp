#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "barricade/graph.hpp"

namespace barricade {

inline constexpr std::size_t kDefaultExhaustiveNodes = 16;

/// Nodes whose barricade exceeds their total in-weight. Such nodes can never
/// be activated by others, so they belong to every fully influencing seed set.
struct DeficiencyReport {
  std::vector<NodeId> deficient;
};

DeficiencyReport influence_deficient(const Graph& graph);

/// Number of weakly connected components with at least two live nodes.
std::size_t nontrivial_components(const Graph& graph);

/// For the subgraph induced by `alive` (indexed by id), entry u is the number
/// of non-trivial weak components left after deleting u. Entries for dead
/// nodes are 0. One articulation-point pass, O(n + m).
std::vector<std::size_t> nontrivial_components_after_removal(const Graph& graph, const std::vector<bool>& alive);

/// A smallest seed set that activates every live node. Deficient nodes are
/// forced in; the rest is searched by increasing size in lexicographic order,
/// so the result is the lexicographically smallest minimum set.
/// Throws GuardError when the graph has more than max_nodes live nodes.
SeedSet min_full_seed_exhaustive(const Graph& graph, std::size_t max_nodes = kDefaultExhaustiveNodes);

/// Every minimum fully influencing seed set, in lexicographic order.
std::vector<SeedSet> all_min_full_seed_sets(const Graph& graph, std::size_t max_nodes = kDefaultExhaustiveNodes);

/// True iff removing `edges` leaves the minimum full seed set size unchanged.
/// Throws ValidationError if an edge is not present.
bool edges_redundant(const Graph& graph, std::span<const Edge> edges,
                     std::size_t max_nodes = kDefaultExhaustiveNodes);

/// Observed minimum seed size after a perturbation, with the bounds the
/// perturbation is known to satisfy.
struct PerturbationBound {
  long lower = 0;
  long upper = 0;
  long observed = 0;
  long before = 0;  // minimum seed size of the unperturbed graph

  bool holds() const { return lower <= observed && observed <= upper; }
};

/// Adds v1->v2 (weight w12) and optionally v2->v1 (weight *w21), then compares
/// minimum full seed sizes. The drop |S*| - |S*'| must lie in [0, 1], so
/// lower = before - 1 and upper = before. Throws ValidationError when an edge
/// already exists.
PerturbationBound check_edge_addition_bound(const Graph& graph, NodeId v1, NodeId v2, double w12,
                                            std::optional<double> w21,
                                            std::size_t max_nodes = kDefaultExhaustiveNodes);

/// Attaches a new node and bounds the new minimum full seed size by
/// max(|M|, |S*| + 1 - |N|) <= |S*'| <= |S*| + 1, where M is the deficient set
/// of the new graph and N the distinct neighbors of the new node.
PerturbationBound check_node_addition_bound(const Graph& graph, const NodeAddition& addition,
                                            std::size_t max_nodes = kDefaultExhaustiveNodes);

/// Seeds of the original graph whose role a single added node can take over.
struct QSetInstance {
  std::vector<NodeId> q;
  std::vector<NodeId> z;                  // neighbors of q outside q
  SeedSet witness_seed_set;               // a minimum full seed set containing q
};

/**
 * Largest subset Q of the added node's neighbors such that
 *  (a) some minimum full seed set of `graph` contains Q,
 *  (b) the edge set between Q and Z (both directions) is redundant,
 *  (c) for every q in Q: sum_{z in Z} W(z,q) < b(q) <= W(v,q) + sum_{z in Z} W(z,q).
 * Ties in size go to the lexicographically smallest Q. Returns nullopt when no
 * non-empty subset qualifies. Exponential in |N| and in the graph size.
 */
std::optional<QSetInstance> find_q_set(const Graph& graph, const NodeAddition& addition,
                                       std::size_t max_nodes = kDefaultExhaustiveNodes);

/// Which premise family an added node satisfies, if any.
enum class AdditionCase {
  none,
  /// The new node is activated by all of its in-neighbors but by no proper
  /// subset, its out-neighbors are among its in-neighbors, and it cannot
  /// activate any out-neighbor on its own.
  just_sufficient,
  /// The new node is deficient and cannot activate any out-neighbor on its own.
  deficient,
};

AdditionCase classify_addition(const Graph& graph, const NodeAddition& addition);

/// Outcome of comparing the predicted and observed minimum seed size after a
/// node addition with a known premise case.
struct ReplacementCheck {
  AdditionCase premise = AdditionCase::none;
  std::size_t q_size = 0;
  long before = 0;
  long predicted = 0;
  long observed = 0;

  bool holds() const { return predicted == observed; }
};

/// Predicted |S*'|: before - |Q| + 1 when |Q| > 1 or the node is deficient,
/// otherwise before. Only defined when classify_addition != none.
ReplacementCheck check_replacement(const Graph& graph, const NodeAddition& addition,
                                   std::size_t max_nodes = kDefaultExhaustiveNodes);

}  // namespace barricade
