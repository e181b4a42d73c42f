#include "barricade/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <string>
#include <string_view>
#include <utility>

#include "barricade/errors.hpp"
#include "barricade/rng.hpp"

namespace barricade {

namespace {

std::string_view next_field(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
  std::size_t start = i;
  while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
  std::string_view field = rest.substr(start, i - start);
  rest.remove_prefix(i);
  return field;
}

std::uint64_t to_id(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer id, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

IngestResult ingest_snap(std::istream& in, Directedness directedness) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first = next_field(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    std::string_view second = next_field(rest);
    if (second.empty()) throw ParseError(line_no, "expected 'u v'");
    // SNAP lists occasionally carry a trailing weight or timestamp column; it is ignored.
    records.emplace_back(to_id(first, line_no), to_id(second, line_no));
  }

  std::vector<std::uint64_t> ids;
  ids.reserve(records.size() * 2);
  for (auto [u, v] : records) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(records.size() * (directedness == Directedness::bidirected ? 2 : 1));
  for (auto [u, v] : records) {
    if (u == v) continue;
    arcs.emplace_back(dense(u), dense(v));
    if (directedness == Directedness::bidirected) arcs.emplace_back(dense(v), dense(u));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (auto [u, v] : arcs) edges.push_back({u, v, 1.0});
  return {Graph(ids.size(), edges, 0.0), std::move(ids)};
}

Subgraph induced_subgraph(const Graph& graph, const std::vector<bool>& member) {
  std::vector<NodeId> parent_ids;
  std::vector<NodeId> local(graph.id_bound(), 0);
  for (NodeId u : graph.nodes()) {
    if (u < member.size() && member[u]) {
      local[u] = static_cast<NodeId>(parent_ids.size());
      parent_ids.push_back(u);
    }
  }
  std::vector<Edge> edges;
  std::vector<double> barricades;
  barricades.reserve(parent_ids.size());
  for (NodeId u : parent_ids) {
    barricades.push_back(graph.barricade(u));
    for (const Arc& a : graph.out_edges(u)) {
      if (a.node < member.size() && member[a.node]) edges.push_back({local[u], local[a.node], a.weight});
    }
  }
  return {Graph(parent_ids.size(), edges, std::move(barricades)), std::move(parent_ids)};
}

Subgraph sample_subgraph(const Graph& graph, const SampleSpec& spec) {
  const std::vector<NodeId> nodes = graph.nodes();
  if (spec.target_nodes < 1) throw ValidationError("sample size must be >= 1");
  if (spec.target_nodes > nodes.size()) {
    throw ValidationError("sample size " + std::to_string(spec.target_nodes) + " exceeds graph size " +
                          std::to_string(nodes.size()));
  }
  Rng rng(spec.rng_seed);
  std::vector<bool> member(graph.id_bound(), false);

  if (spec.method == SampleMethod::uniform_node_induced) {
    // partial Fisher-Yates
    std::vector<NodeId> pool = nodes;
    for (std::size_t i = 0; i < spec.target_nodes; ++i) {
      const std::size_t j = i + rng.index(pool.size() - i);
      std::swap(pool[i], pool[j]);
      member[pool[i]] = true;
    }
    return induced_subgraph(graph, member);
  }

  std::size_t taken = 0;
  std::vector<NodeId> neighbors;
  while (taken < spec.target_nodes) {
    // uniform root among nodes not yet taken
    std::vector<NodeId> unvisited;
    for (NodeId u : nodes) {
      if (!member[u]) unvisited.push_back(u);
    }
    const NodeId root = unvisited[rng.index(unvisited.size())];
    std::deque<NodeId> queue{root};
    member[root] = true;
    ++taken;
    while (!queue.empty() && taken < spec.target_nodes) {
      const NodeId u = queue.front();
      queue.pop_front();
      neighbors.clear();
      for (const Arc& a : graph.out_edges(u)) neighbors.push_back(a.node);
      for (const Arc& a : graph.in_edges(u)) neighbors.push_back(a.node);
      std::sort(neighbors.begin(), neighbors.end());
      neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
      for (NodeId w : neighbors) {
        if (taken == spec.target_nodes) break;
        if (!member[w]) {
          member[w] = true;
          ++taken;
          queue.push_back(w);
        }
      }
    }
  }
  return induced_subgraph(graph, member);
}

}  // namespace barricade
