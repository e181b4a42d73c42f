#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "barricade/graph.hpp"

namespace barricade {

/// Activation history of one diffusion run. steps[t] is the cumulative active
/// set A_t (sorted); steps.front() is the seed set and steps.back() the fixed
/// point, which is never repeated.
struct CascadeTrace {
  std::vector<std::vector<NodeId>> steps;
  std::vector<NodeId> final_set;
  std::size_t sigma = 0;
};

/**
 * Synchronous threshold diffusion over a fixed graph.
 *
 * An inactive node u activates in round t+1 iff the weight it receives from
 * nodes active in round t is >= b(u). Nodes with b(u) == 0 therefore activate
 * in round 1 without any active neighbor.
 *
 * The comparison is made against the sum of active in-edge weights taken in
 * adjacency order, so the outcome depends only on the active set and never on
 * the order in which neighbors activated. The engine keeps scratch buffers and
 * is not thread-safe; use one engine per thread over a shared graph.
 */
class CascadeEngine {
 public:
  explicit CascadeEngine(const Graph& graph);

  CascadeTrace trace(const SeedSet& seeds);
  std::size_t sigma(const SeedSet& seeds);
  std::size_t sigma(std::span<const NodeId> seeds);

  /// Fixed point reached from `active` (indexed by id), written back in place.
  /// Returns the number of active nodes. Seeds need not be validated here.
  std::size_t close(std::vector<bool>& active);

  /// Size of the fixed point of `active` plus `extra`, leaving `active`
  /// untouched. `active` must already be a fixed point.
  std::size_t closure_size_with(const std::vector<bool>& active, std::size_t active_count, NodeId extra);

  const Graph& graph() const { return graph_; }

 private:
  template <typename OnRound>
  std::size_t run(std::vector<bool>& active, std::vector<NodeId> frontier, bool seed_zero_barricades,
                  OnRound&& on_round);
  bool reaches_threshold(NodeId u, const std::vector<bool>& active);

  const Graph& graph_;
  std::vector<NodeId> touched_;
  std::vector<bool> queued_;
};

CascadeTrace run_cascade(const Graph& graph, const SeedSet& seeds);
std::size_t sigma(const Graph& graph, const SeedSet& seeds);
/// True iff every live node ends up active. Vacuously true on an empty graph.
bool is_fully_influenced(const Graph& graph, const SeedSet& seeds);

}  // namespace barricade
