#include "barricade/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "barricade/cascade.hpp"
#include "barricade/errors.hpp"

namespace barricade {

namespace {

void check_guard(const Graph& graph, std::size_t max_nodes) {
  if (graph.node_count() > max_nodes) {
    throw GuardError("exhaustive search limited to " + std::to_string(max_nodes) + " nodes, graph has " +
                     std::to_string(graph.node_count()));
  }
}

// Calls visit(combination) for every r-subset of `pool` in lexicographic order
// until visit returns true. Returns whether it was stopped early.
bool for_each_combination(std::span<const NodeId> pool, std::size_t r,
                          const std::function<bool(std::span<const NodeId>)>& visit) {
  const std::size_t n = pool.size();
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<NodeId> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    // advance to the next combination
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Shared state for minimum full seed enumeration.
class FullSeedSearch {
 public:
  FullSeedSearch(const Graph& graph, std::size_t max_nodes) : graph_(graph), engine_(graph) {
    check_guard(graph, max_nodes);
    forced_ = influence_deficient(graph).deficient;
    for (NodeId u : graph.nodes()) {
      if (!std::binary_search(forced_.begin(), forced_.end(), u)) free_.push_back(u);
    }
  }

  // Visits fully influencing sets of exactly `extra` free nodes plus the forced ones.
  bool visit_size(std::size_t extra, const std::function<bool(const std::vector<NodeId>&)>& on_full) {
    std::vector<NodeId> seeds;
    return for_each_combination(free_, extra, [&](std::span<const NodeId> chosen) {
      seeds.clear();
      std::merge(forced_.begin(), forced_.end(), chosen.begin(), chosen.end(), std::back_inserter(seeds));
      if (engine_.sigma(seeds) != graph_.node_count()) return false;
      return on_full(seeds);
    });
  }

  SeedSet first_minimum() {
    for (std::size_t extra = 0; extra <= free_.size(); ++extra) {
      std::vector<NodeId> found;
      if (visit_size(extra, [&](const std::vector<NodeId>& s) {
            found = s;
            return true;
          })) {
        return SeedSet(std::move(found));
      }
    }
    // unreachable: the full node set always activates everything
    return SeedSet(graph_.nodes());
  }

  std::size_t forced_count() const { return forced_.size(); }

 private:
  const Graph& graph_;
  CascadeEngine engine_;
  std::vector<NodeId> forced_;
  std::vector<NodeId> free_;
};

std::vector<NodeId> distinct_neighbors(const NodeAddition& addition) {
  std::vector<NodeId> out;
  for (const Arc& a : addition.in) out.push_back(a.node);
  for (const Arc& a : addition.out) out.push_back(a.node);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double weight_to(const std::vector<Arc>& arcs, NodeId target) {
  for (const Arc& a : arcs) {
    if (a.node == target) return a.weight;
  }
  return 0.0;
}

}  // namespace

DeficiencyReport influence_deficient(const Graph& graph) {
  DeficiencyReport report;
  for (NodeId u : graph.nodes()) {
    if (graph.barricade(u) > graph.in_weight_sum(u)) report.deficient.push_back(u);
  }
  return report;
}

std::size_t nontrivial_components(const Graph& graph) {
  std::vector<bool> seen(graph.id_bound(), false);
  std::vector<NodeId> stack;
  std::size_t count = 0;
  for (NodeId root : graph.nodes()) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.push_back(root);
    std::size_t size = 0;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (auto list : {graph.out_edges(u), graph.in_edges(u)}) {
        for (const Arc& a : list) {
          if (!seen[a.node]) {
            seen[a.node] = true;
            stack.push_back(a.node);
          }
        }
      }
    }
    if (size >= 2) ++count;
  }
  return count;
}

std::vector<std::size_t> nontrivial_components_after_removal(const Graph& graph, const std::vector<bool>& alive) {
  const std::size_t n = graph.id_bound();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  auto is_alive = [&](NodeId u) { return u < alive.size() && alive[u] && graph.alive(u); };

  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0), subtree(n, 1), comp(n, 0);
  std::vector<NodeId> parent(n, 0);
  std::vector<std::size_t> comp_size;
  // Per node: number of non-trivial pieces split off below it, and their total size.
  std::vector<std::size_t> split_pieces(n, 0), split_size(n, 0);

  struct Frame {
    NodeId u;
    std::size_t next;  // index into out-edges then in-edges
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (!is_alive(root) || disc[root] != kUnvisited) continue;
    const std::size_t cid = comp_size.size();
    comp_size.push_back(0);
    disc[root] = low[root] = timer++;
    parent[root] = root;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const NodeId u = f.u;
      auto out = graph.out_edges(u);
      auto in = graph.in_edges(u);
      if (f.next < out.size() + in.size()) {
        const NodeId w = f.next < out.size() ? out[f.next].node : in[f.next - out.size()].node;
        ++f.next;
        if (!is_alive(w)) continue;
        if (disc[w] == kUnvisited) {
          disc[w] = low[w] = timer++;
          parent[w] = u;
          stack.push_back({w, 0});
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      comp[u] = cid;
      ++comp_size[cid];
      if (u != root) {
        const NodeId p = parent[u];
        subtree[p] += subtree[u];
        low[p] = std::min(low[p], low[u]);
        // u's subtree detaches when p is removed (always for the root's children)
        if (p == root || low[u] >= disc[p]) {
          split_size[p] += subtree[u];
          if (subtree[u] >= 2) ++split_pieces[p];
        }
      }
    }
  }

  std::size_t base = 0;
  for (std::size_t s : comp_size) base += s >= 2 ? 1 : 0;

  std::vector<std::size_t> result(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (!is_alive(u)) continue;
    const std::size_t size = comp_size[comp[u]];
    std::size_t pieces = split_pieces[u];
    const std::size_t remainder = size - 1 - split_size[u];
    if (remainder >= 2) ++pieces;
    result[u] = base - (size >= 2 ? 1 : 0) + pieces;
  }
  return result;
}

SeedSet min_full_seed_exhaustive(const Graph& graph, std::size_t max_nodes) {
  return FullSeedSearch(graph, max_nodes).first_minimum();
}

std::vector<SeedSet> all_min_full_seed_sets(const Graph& graph, std::size_t max_nodes) {
  FullSeedSearch search(graph, max_nodes);
  const std::size_t min_size = search.first_minimum().size();
  std::vector<SeedSet> all;
  search.visit_size(min_size - search.forced_count(), [&](const std::vector<NodeId>& s) {
    all.emplace_back(s);
    return false;
  });
  return all;
}

bool edges_redundant(const Graph& graph, std::span<const Edge> edges, std::size_t max_nodes) {
  Graph reduced = graph.without_edges(edges);
  if (edges.empty()) return true;
  return min_full_seed_exhaustive(graph, max_nodes).size() == min_full_seed_exhaustive(reduced, max_nodes).size();
}

PerturbationBound check_edge_addition_bound(const Graph& graph, NodeId v1, NodeId v2, double w12,
                                            std::optional<double> w21, std::size_t max_nodes) {
  if (!graph.alive(v1) || !graph.alive(v2)) throw ValidationError("edge endpoints must be live nodes");
  if (graph.has_edge(v1, v2) || (w21 && graph.has_edge(v2, v1))) {
    throw ValidationError("edge between " + std::to_string(v1) + " and " + std::to_string(v2) + " already present");
  }
  std::vector<Edge> added{{v1, v2, w12}};
  if (w21) added.push_back({v2, v1, *w21});
  Graph perturbed = graph.with_edges(added);

  PerturbationBound bound;
  bound.before = static_cast<long>(min_full_seed_exhaustive(graph, max_nodes).size());
  bound.observed = static_cast<long>(min_full_seed_exhaustive(perturbed, max_nodes).size());
  bound.lower = bound.before - 1;
  bound.upper = bound.before;
  return bound;
}

PerturbationBound check_node_addition_bound(const Graph& graph, const NodeAddition& addition,
                                            std::size_t max_nodes) {
  Graph extended = graph.with_node(addition);
  check_guard(extended, max_nodes);
  const long neighbors = static_cast<long>(distinct_neighbors(addition).size());
  const long deficient = static_cast<long>(influence_deficient(extended).deficient.size());

  PerturbationBound bound;
  bound.before = static_cast<long>(min_full_seed_exhaustive(graph, max_nodes).size());
  bound.observed = static_cast<long>(min_full_seed_exhaustive(extended, max_nodes).size());
  bound.lower = std::max(deficient, bound.before + 1 - neighbors);
  bound.upper = bound.before + 1;
  return bound;
}

std::optional<QSetInstance> find_q_set(const Graph& graph, const NodeAddition& addition, std::size_t max_nodes) {
  check_guard(graph, max_nodes);
  const std::vector<NodeId> neighbors = distinct_neighbors(addition);
  for (NodeId u : neighbors) {
    if (!graph.alive(u)) throw ValidationError("added node attaches to unknown node " + std::to_string(u));
  }
  const std::vector<SeedSet> minimum_sets = all_min_full_seed_sets(graph, max_nodes);

  std::optional<QSetInstance> found;
  for (std::size_t r = neighbors.size(); r >= 1 && !found; --r) {
    for_each_combination(neighbors, r, [&](std::span<const NodeId> q) {
      // (a)
      auto witness = std::find_if(minimum_sets.begin(), minimum_sets.end(), [&](const SeedSet& s) {
        return std::all_of(q.begin(), q.end(), [&](NodeId u) { return s.contains(u); });
      });
      if (witness == minimum_sets.end()) return false;

      std::vector<bool> in_q(graph.id_bound(), false);
      for (NodeId u : q) in_q[u] = true;
      std::vector<NodeId> z;
      std::vector<Edge> boundary;
      for (NodeId u : q) {
        for (const Arc& a : graph.out_edges(u)) {
          if (!in_q[a.node]) {
            z.push_back(a.node);
            boundary.push_back({u, a.node, a.weight});
          }
        }
        for (const Arc& a : graph.in_edges(u)) {
          if (!in_q[a.node]) {
            z.push_back(a.node);
            boundary.push_back({a.node, u, a.weight});
          }
        }
      }
      std::sort(z.begin(), z.end());
      z.erase(std::unique(z.begin(), z.end()), z.end());

      // (c)
      std::vector<bool> in_z(graph.id_bound(), false);
      for (NodeId u : z) in_z[u] = true;
      for (NodeId u : q) {
        const double from_z = graph.in_weight_sum(u, in_z);
        const double b = graph.barricade(u);
        if (!(from_z < b && b <= weight_to(addition.out, u) + from_z)) return false;
      }

      // (b)
      if (!edges_redundant(graph, boundary, max_nodes)) return false;

      found = QSetInstance{std::vector<NodeId>(q.begin(), q.end()), std::move(z), *witness};
      return true;
    });
  }
  return found;
}

AdditionCase classify_addition(const Graph& graph, const NodeAddition& addition) {
  const Graph extended = graph.with_node(addition);
  const auto v = static_cast<NodeId>(graph.id_bound());
  const double total_in = extended.in_weight_sum(v);
  const double b = addition.barricade;

  for (const Arc& a : addition.out) {
    if (!(a.weight < graph.barricade(a.node))) return AdditionCase::none;
  }
  if (total_in < b) return AdditionCase::deficient;

  for (const Arc& a : addition.out) {
    if (!extended.has_edge(a.node, v)) return AdditionCase::none;
  }
  // The largest proper subset of in-neighbors drops the lightest edge.
  if (!addition.in.empty()) {
    double lightest = addition.in.front().weight;
    for (const Arc& a : addition.in) lightest = std::min(lightest, a.weight);
    if (!(total_in - lightest < b)) return AdditionCase::none;
  }
  return b <= total_in ? AdditionCase::just_sufficient : AdditionCase::none;
}

ReplacementCheck check_replacement(const Graph& graph, const NodeAddition& addition, std::size_t max_nodes) {
  ReplacementCheck check;
  check.premise = classify_addition(graph, addition);
  if (check.premise == AdditionCase::none) {
    throw ValidationError("node addition satisfies neither replacement premise");
  }
  const Graph extended = graph.with_node(addition);
  check_guard(extended, max_nodes);
  auto q = find_q_set(graph, addition, max_nodes);
  check.q_size = q ? q->q.size() : 0;
  check.before = static_cast<long>(min_full_seed_exhaustive(graph, max_nodes).size());
  check.observed = static_cast<long>(min_full_seed_exhaustive(extended, max_nodes).size());
  const long q_size = static_cast<long>(check.q_size);
  if (check.premise == AdditionCase::deficient || q_size > 1) {
    check.predicted = check.before - q_size + 1;
  } else {
    check.predicted = check.before;
  }
  return check;
}

}  // namespace barricade
