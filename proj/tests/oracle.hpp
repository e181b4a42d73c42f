#pragma once

// Slow reference implementations used only by tests. Nothing here shares code
// with the library beyond the Graph container itself.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "barricade/graph.hpp"
#include "barricade/rng.hpp"

namespace oracle {

using barricade::Edge;
using barricade::Graph;
using barricade::NodeId;

// Fixed point by sweeping every node each round until nothing changes.
// Sums are taken over the edge list, not the adjacency lists.
inline std::vector<bool> fixed_point(const Graph& g, const std::vector<NodeId>& seeds) {
  const std::vector<Edge> edges = g.edges();
  std::vector<bool> active(g.id_bound(), false);
  for (NodeId s : seeds) active[s] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<double> received(g.id_bound(), 0.0);
    for (const Edge& e : edges) {
      if (active[e.from]) received[e.to] += e.weight;
    }
    std::vector<bool> next = active;
    for (NodeId u : g.nodes()) {
      if (!active[u] && received[u] >= g.barricade(u)) {
        next[u] = true;
        changed = true;
      }
    }
    active = next;
  }
  return active;
}

inline std::vector<NodeId> fixed_point_set(const Graph& g, const std::vector<NodeId>& seeds) {
  const std::vector<bool> active = fixed_point(g, seeds);
  std::vector<NodeId> out;
  for (NodeId u : g.nodes()) {
    if (active[u]) out.push_back(u);
  }
  return out;
}

inline std::size_t spread(const Graph& g, const std::vector<NodeId>& seeds) {
  return fixed_point_set(g, seeds).size();
}

inline std::vector<NodeId> subset_of(const std::vector<NodeId>& nodes, std::uint32_t mask) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (mask >> i & 1u) out.push_back(nodes[i]);
  }
  return out;
}

// Size of a smallest fully influencing set, by trying all 2^n subsets.
inline std::size_t min_full_size(const Graph& g) {
  const std::vector<NodeId> nodes = g.nodes();
  std::size_t best = nodes.size();
  for (std::uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    if (spread(g, subset_of(nodes, mask)) == nodes.size()) best = size;
  }
  return best;
}

// All smallest fully influencing sets.
inline std::vector<std::vector<NodeId>> all_min_full_sets(const Graph& g) {
  const std::vector<NodeId> nodes = g.nodes();
  const std::size_t best = min_full_size(g);
  std::vector<std::vector<NodeId>> out;
  for (std::uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != best) continue;
    auto s = subset_of(nodes, mask);
    if (spread(g, s) == nodes.size()) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Best spread over all subsets of exactly min(k, n) nodes.
inline std::size_t best_spread(const Graph& g, std::size_t k) {
  const std::vector<NodeId> nodes = g.nodes();
  const std::size_t r = std::min(k, nodes.size());
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
    best = std::max(best, spread(g, subset_of(nodes, mask)));
  }
  return best;
}

// Weak components with >= 2 nodes among live nodes, via union-find over edges.
inline std::size_t nontrivial_components(const Graph& g) {
  std::vector<NodeId> parent(g.id_bound());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.from)] = find(e.to);
  std::vector<std::size_t> size(g.id_bound(), 0);
  for (NodeId u : g.nodes()) ++size[find(u)];
  return static_cast<std::size_t>(std::count_if(size.begin(), size.end(), [](std::size_t s) { return s >= 2; }));
}

// Random graph on n nodes with weights and barricades that are multiples of
// 1/8, so every sum below is exact and ties are frequent.
inline Graph dyadic_graph(std::uint64_t seed, std::size_t min_nodes, std::size_t max_nodes, double edge_p = -1.0) {
  barricade::Rng rng(seed);
  const std::size_t n = min_nodes + rng.index(max_nodes - min_nodes + 1);
  const double p = edge_p >= 0.0 ? edge_p : rng.uniform(0.1, 0.8);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(p)) edges.push_back({u, v, static_cast<double>(1 + rng.index(16)) / 8.0});
    }
  }
  std::vector<double> b(n);
  for (double& x : b) x = static_cast<double>(rng.index(33)) / 8.0;
  return Graph(n, edges, std::move(b));
}

}  // namespace oracle
