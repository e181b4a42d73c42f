#include "barricade/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "barricade/errors.hpp"

namespace barricade {

namespace {

bool arc_less(const Arc& a, const Arc& b) { return a.node < b.node; }

const Arc* find_arc(const std::vector<Arc>& list, NodeId node) {
  auto it = std::lower_bound(list.begin(), list.end(), Arc{node, 0.0}, arc_less);
  if (it == list.end() || it->node != node) return nullptr;
  return &*it;
}

void check_barricade(double b, std::size_t u) {
  if (!std::isfinite(b) || b < 0.0) {
    throw ValidationError("barricade of node " + std::to_string(u) + " must be finite and >= 0, got " +
                          std::to_string(b));
  }
}

}  // namespace

Graph::Graph(std::size_t node_count, std::span<const Edge> edges, std::vector<double> barricades)
    : barricades_(std::move(barricades)) {
  if (barricades_.size() != node_count) {
    throw ValidationError("expected " + std::to_string(node_count) + " barricades, got " +
                          std::to_string(barricades_.size()));
  }
  for (std::size_t u = 0; u < node_count; ++u) check_barricade(barricades_[u], u);
  alive_.assign(node_count, true);
  live_count_ = node_count;
  build(edges);
}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges, double barricade)
    : Graph(node_count, edges, std::vector<double>(node_count, barricade)) {}

void Graph::build(std::span<const Edge> edges) {
  const std::size_t n = barricades_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                            " references a node outside [0, " + std::to_string(n) + ")");
    }
    if (!alive_[e.from] || !alive_[e.to]) {
      throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                            " touches a removed node");
    }
    if (e.from == e.to) throw ValidationError("self loop on node " + std::to_string(e.from));
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                            " has non-positive weight " + std::to_string(e.weight));
    }
    out_[e.from].push_back({e.to, e.weight});
    in_[e.to].push_back({e.from, e.weight});
  }
  for (NodeId u = 0; u < n; ++u) {
    std::stable_sort(out_[u].begin(), out_[u].end(), arc_less);
    std::stable_sort(in_[u].begin(), in_[u].end(), arc_less);
    auto dup = std::adjacent_find(out_[u].begin(), out_[u].end(),
                                  [](const Arc& a, const Arc& b) { return a.node == b.node; });
    if (dup != out_[u].end()) {
      throw ValidationError("duplicate edge " + std::to_string(u) + "->" + std::to_string(dup->node));
    }
  }
  edge_count_ = edges.size();
}

void Graph::check_node(NodeId u) const {
  if (u >= barricades_.size()) {
    throw ValidationError("node " + std::to_string(u) + " out of range [0, " +
                          std::to_string(barricades_.size()) + ")");
  }
}

std::span<const Arc> Graph::out_edges(NodeId u) const {
  check_node(u);
  return out_[u];
}

std::span<const Arc> Graph::in_edges(NodeId u) const {
  check_node(u);
  return in_[u];
}

double Graph::barricade(NodeId u) const {
  check_node(u);
  return barricades_[u];
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_count_);
  for (NodeId u = 0; u < alive_.size(); ++u) {
    if (alive_[u]) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < out_.size(); ++u) {
    for (const Arc& a : out_[u]) out.push_back({u, a.node, a.weight});
  }
  return out;
}

bool Graph::has_edge(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  return find_arc(out_[from], to) != nullptr;
}

double Graph::edge_weight(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  const Arc* a = find_arc(out_[from], to);
  return a ? a->weight : 0.0;
}

double Graph::in_weight_sum(NodeId u) const {
  check_node(u);
  double sum = 0.0;
  for (const Arc& a : in_[u]) sum += a.weight;
  return sum;
}

double Graph::in_weight_sum(NodeId u, const std::vector<bool>& member) const {
  check_node(u);
  double sum = 0.0;
  for (const Arc& a : in_[u]) {
    if (a.node < member.size() && member[a.node]) sum += a.weight;
  }
  return sum;
}

double Graph::in_weight_sum(NodeId u, std::span<const NodeId> restrict_to) const {
  std::vector<bool> member(id_bound(), false);
  for (NodeId z : restrict_to) {
    check_node(z);
    member[z] = true;
  }
  return in_weight_sum(u, member);
}

double Graph::out_weight_sum(NodeId u) const {
  check_node(u);
  double sum = 0.0;
  for (const Arc& a : out_[u]) sum += a.weight;
  return sum;
}

Graph Graph::without_node(NodeId u) const {
  check_node(u);
  if (!alive_[u]) throw ValidationError("node " + std::to_string(u) + " already removed");
  Graph g = *this;
  for (const Arc& a : out_[u]) {
    auto& list = g.in_[a.node];
    list.erase(std::lower_bound(list.begin(), list.end(), Arc{u, 0.0}, arc_less));
  }
  for (const Arc& a : in_[u]) {
    auto& list = g.out_[a.node];
    list.erase(std::lower_bound(list.begin(), list.end(), Arc{u, 0.0}, arc_less));
  }
  g.edge_count_ -= out_[u].size() + in_[u].size();
  g.out_[u].clear();
  g.in_[u].clear();
  g.alive_[u] = false;
  --g.live_count_;
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const Edge& e : removed) {
    check_node(e.from);
    check_node(e.to);
    auto& out = g.out_[e.from];
    auto it = std::lower_bound(out.begin(), out.end(), Arc{e.to, 0.0}, arc_less);
    if (it == out.end() || it->node != e.to) {
      throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " not present");
    }
    out.erase(it);
    auto& in = g.in_[e.to];
    in.erase(std::lower_bound(in.begin(), in.end(), Arc{e.from, 0.0}, arc_less));
    --g.edge_count_;
  }
  return g;
}

Graph Graph::with_edges(std::span<const Edge> added) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), added.begin(), added.end());
  Graph g = *this;
  g.build(all);
  return g;
}

Graph Graph::with_barricades(std::vector<double> barricades) const {
  if (barricades.size() != barricades_.size()) {
    throw ValidationError("expected " + std::to_string(barricades_.size()) + " barricades, got " +
                          std::to_string(barricades.size()));
  }
  for (std::size_t u = 0; u < barricades.size(); ++u) check_barricade(barricades[u], u);
  Graph g = *this;
  g.barricades_ = std::move(barricades);
  return g;
}

Graph Graph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edge_count_) {
    throw ValidationError("expected " + std::to_string(edge_count_) + " weights, got " +
                          std::to_string(weights.size()));
  }
  std::vector<Edge> all = edges();
  for (std::size_t i = 0; i < all.size(); ++i) all[i].weight = weights[i];
  Graph g = *this;
  g.build(all);
  return g;
}

Graph Graph::with_node(const NodeAddition& addition) const {
  check_barricade(addition.barricade, id_bound());
  const auto v = static_cast<NodeId>(id_bound());
  std::vector<Edge> all = edges();
  for (const Arc& a : addition.in) all.push_back({a.node, v, a.weight});
  for (const Arc& a : addition.out) all.push_back({v, a.node, a.weight});
  Graph g = *this;
  g.barricades_.push_back(addition.barricade);
  g.alive_.push_back(true);
  ++g.live_count_;
  g.build(all);
  return g;
}

SeedSet::SeedSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) throw ValidationError("duplicate seed " + std::to_string(*dup));
}

void SeedSet::validate_for(const Graph& g) const {
  for (NodeId u : members_) {
    if (!g.alive(u)) throw ValidationError("seed " + std::to_string(u) + " is not a node of the graph");
  }
}

bool SeedSet::contains(NodeId u) const { return std::binary_search(members_.begin(), members_.end(), u); }

}  // namespace barricade
