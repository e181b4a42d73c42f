#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "barricade/graph.hpp"

namespace barricade {

enum class Directedness { directed, bidirected };

struct IngestResult {
  Graph graph;
  /// original_ids[i] is the dataset id of dense node i (ascending).
  std::vector<std::uint64_t> original_ids;
};

/**
 * Reads a SNAP edge list with arbitrary non-negative ids and remaps them to
 * 0..n-1 in ascending order of the original id. In bidirected mode every
 * record yields both directions. Repeated records (including a record and its
 * reverse in bidirected mode) collapse to one edge and self loops are
 * dropped, since public dumps contain both. Weights are 1 and barricades 0;
 * use assign_params to simulate parameters.
 */
IngestResult ingest_snap(std::istream& in, Directedness directedness);

enum class SampleMethod { uniform_node_induced, bfs_ball };

struct SampleSpec {
  std::size_t target_nodes = 1;
  SampleMethod method = SampleMethod::bfs_ball;
  std::uint64_t rng_seed = 0;
};

struct Subgraph {
  Graph graph;
  /// parent_ids[i] is the parent-graph id of subgraph node i (ascending).
  std::vector<NodeId> parent_ids;
};

/// Subgraph induced by the nodes with member[u] set, relabelled densely in id order.
Subgraph induced_subgraph(const Graph& graph, const std::vector<bool>& member);

/**
 * Node-induced sample of `spec.target_nodes` nodes. bfs_ball grows a
 * breadth-first ball (edge direction ignored, neighbors in id order) from a
 * random root; if the root's component runs out, it restarts from a random
 * unvisited node.
 */
Subgraph sample_subgraph(const Graph& graph, const SampleSpec& spec);

}  // namespace barricade
