#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace barricade {

using NodeId = std::uint32_t;

/// One endpoint of an adjacency entry: the neighbor and the edge weight.
struct Arc {
  NodeId node;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  NodeId from;
  NodeId to;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Added node description: its barricade plus the edges connecting it to the
/// existing graph. `in` holds (source, weight) pairs, `out` holds (target, weight).
struct NodeAddition {
  double barricade = 0.0;
  std::vector<Arc> in;
  std::vector<Arc> out;
};

/**
 * Directed weighted graph with a barricade factor per node.
 *
 * Immutable once built: every transformation returns a new graph. Node ids are
 * dense in [0, id_bound()). Removed nodes keep their id but are tombstoned; they
 * carry no edges and are skipped by nodes().
 *
 * Invariants enforced at construction:
 *  - every stored weight is finite and > 0,
 *  - at most one edge per ordered pair, no self loops,
 *  - barricades are finite and >= 0,
 *  - in/out adjacency lists mirror each other exactly.
 *
 * Adjacency lists are sorted by neighbor id, so iteration order is canonical
 * and independent of input edge order.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph with `node_count` live nodes. Throws ValidationError on any
  /// invariant violation (including an edge endpoint >= node_count).
  Graph(std::size_t node_count, std::span<const Edge> edges, std::vector<double> barricades);

  /// Same, with every barricade set to `barricade`.
  Graph(std::size_t node_count, std::span<const Edge> edges, double barricade);

  std::size_t id_bound() const { return barricades_.size(); }
  std::size_t node_count() const { return live_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool alive(NodeId u) const { return u < alive_.size() && alive_[u]; }
  bool contains(NodeId u) const { return alive(u); }

  std::span<const Arc> out_edges(NodeId u) const;
  std::span<const Arc> in_edges(NodeId u) const;
  double barricade(NodeId u) const;
  std::span<const double> barricades() const { return barricades_; }

  /// Live node ids in increasing order.
  std::vector<NodeId> nodes() const;

  /// Every edge, ordered by (from, to).
  std::vector<Edge> edges() const;

  bool has_edge(NodeId from, NodeId to) const;
  /// Weight of from->to, 0 when absent.
  double edge_weight(NodeId from, NodeId to) const;

  /// Sum of in-edge weights of u, in adjacency order.
  double in_weight_sum(NodeId u) const;
  /// Same, restricted to sources z with member[z] true. member is indexed by id.
  double in_weight_sum(NodeId u, const std::vector<bool>& member) const;
  double in_weight_sum(NodeId u, std::span<const NodeId> restrict_to) const;
  double out_weight_sum(NodeId u) const;

  // Transformations. Each returns a new graph and validates its input.
  Graph without_node(NodeId u) const;
  Graph without_edges(std::span<const Edge> edges) const;
  Graph with_edges(std::span<const Edge> edges) const;
  Graph with_barricades(std::vector<double> barricades) const;
  Graph with_weights(std::span<const double> weights_in_edge_order) const;
  /// Appends a node with id id_bound(). Returns the new graph; the new id is
  /// the old id_bound().
  Graph with_node(const NodeAddition& addition) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build(std::span<const Edge> edges);
  void check_node(NodeId u) const;

  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<double> barricades_;
  std::vector<bool> alive_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Sorted, duplicate-free set of node ids valid for a particular graph.
class SeedSet {
 public:
  SeedSet() = default;
  /// Sorts the ids; throws ValidationError on duplicates.
  explicit SeedSet(std::vector<NodeId> members);

  /// Throws ValidationError unless every member is a live node of g.
  void validate_for(const Graph& g) const;

  std::span<const NodeId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId u) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SeedSet&, const SeedSet&) = default;
  friend auto operator<=>(const SeedSet& a, const SeedSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<NodeId> members_;
};

}  // namespace barricade
