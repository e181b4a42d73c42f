#include "barricade/cascade.hpp"

#include <algorithm>

namespace barricade {

CascadeEngine::CascadeEngine(const Graph& graph)
    : graph_(graph), queued_(graph.id_bound(), false) {}

bool CascadeEngine::reaches_threshold(NodeId u, const std::vector<bool>& active) {
  const double b = graph_.barricade(u);
  double sum = 0.0;
  for (const Arc& a : graph_.in_edges(u)) {
    if (active[a.node]) {
      sum += a.weight;
      if (sum >= b) return true;
    }
  }
  return sum >= b;
}

template <typename OnRound>
std::size_t CascadeEngine::run(std::vector<bool>& active, std::vector<NodeId> frontier, bool seed_zero_barricades,
                               OnRound&& on_round) {
  std::size_t added = 0;
  std::vector<NodeId> next;
  bool first_round = true;
  while (true) {
    next.clear();
    touched_.clear();
    if (first_round && seed_zero_barricades) {
      for (NodeId u : graph_.nodes()) {
        if (!active[u] && graph_.barricade(u) <= 0.0) {
          queued_[u] = true;
          touched_.push_back(u);
        }
      }
    }
    first_round = false;
    for (NodeId u : frontier) {
      for (const Arc& a : graph_.out_edges(u)) {
        if (!active[a.node] && !queued_[a.node]) {
          queued_[a.node] = true;
          touched_.push_back(a.node);
        }
      }
    }
    // Decide the whole round against A_t before marking anything active.
    for (NodeId v : touched_) {
      queued_[v] = false;
      if (reaches_threshold(v, active)) next.push_back(v);
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (NodeId v : next) active[v] = true;
    added += next.size();
    on_round(next);
    frontier.swap(next);
  }
  return added;
}

CascadeTrace CascadeEngine::trace(const SeedSet& seeds) {
  seeds.validate_for(graph_);
  std::vector<bool> active(graph_.id_bound(), false);
  std::vector<NodeId> frontier(seeds.begin(), seeds.end());
  for (NodeId s : frontier) active[s] = true;

  CascadeTrace out;
  out.steps.emplace_back(frontier);
  run(active, frontier, true, [&](const std::vector<NodeId>& added) {
    std::vector<NodeId> step;
    step.reserve(out.steps.back().size() + added.size());
    std::merge(out.steps.back().begin(), out.steps.back().end(), added.begin(), added.end(),
               std::back_inserter(step));
    out.steps.push_back(std::move(step));
  });
  out.final_set = out.steps.back();
  out.sigma = out.final_set.size();
  return out;
}

std::size_t CascadeEngine::sigma(const SeedSet& seeds) {
  seeds.validate_for(graph_);
  return sigma(seeds.members());
}

std::size_t CascadeEngine::sigma(std::span<const NodeId> seeds) {
  std::vector<bool> active(graph_.id_bound(), false);
  std::vector<NodeId> frontier;
  frontier.reserve(seeds.size());
  for (NodeId s : seeds) {
    if (!active[s]) {
      active[s] = true;
      frontier.push_back(s);
    }
  }
  const std::size_t seeded = frontier.size();
  return seeded + run(active, std::move(frontier), true, [](const std::vector<NodeId>&) {});
}

std::size_t CascadeEngine::close(std::vector<bool>& active) {
  std::vector<NodeId> frontier;
  for (NodeId u = 0; u < active.size(); ++u) {
    if (active[u]) frontier.push_back(u);
  }
  const std::size_t initial = frontier.size();
  return initial + run(active, std::move(frontier), true, [](const std::vector<NodeId>&) {});
}

std::size_t CascadeEngine::closure_size_with(const std::vector<bool>& active, std::size_t active_count,
                                             NodeId extra) {
  if (active[extra]) return active_count;
  std::vector<bool> scratch = active;
  scratch[extra] = true;
  // active is already closed, so only extra's influence can start new rounds
  return active_count + 1 + run(scratch, {extra}, false, [](const std::vector<NodeId>&) {});
}

CascadeTrace run_cascade(const Graph& graph, const SeedSet& seeds) { return CascadeEngine(graph).trace(seeds); }

std::size_t sigma(const Graph& graph, const SeedSet& seeds) { return CascadeEngine(graph).sigma(seeds); }

bool is_fully_influenced(const Graph& graph, const SeedSet& seeds) {
  return sigma(graph, seeds) == graph.node_count();
}

}  // namespace barricade
