#include "barricade/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "barricade/cascade.hpp"
#include "barricade/errors.hpp"
#include "barricade/rng.hpp"
#include "barricade/structure.hpp"

namespace barricade {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Graph minus a shrinking set of deleted nodes, with per-node sums kept exact:
// every sum is recomputed in adjacency order over live neighbors, which is the
// same order the cascade engine uses, so "b <= in_sum" here implies activation
// there once the same neighbors are active.
class ShrinkingGraph {
 public:
  explicit ShrinkingGraph(const Graph& graph)
      : graph_(graph),
        alive_(graph.id_bound(), false),
        in_sum_(graph.id_bound(), 0.0),
        strength_(graph.id_bound(), 0.0) {
    for (NodeId u : graph.nodes()) alive_[u] = true;
    for (NodeId u : graph.nodes()) refresh(u);
  }

  const std::vector<bool>& alive() const { return alive_; }
  bool removable(NodeId u) const { return alive_[u] && graph_.barricade(u) <= in_sum_[u]; }
  double strength(NodeId u) const { return strength_[u]; }

  // Live in-weight of w if `excluded` were gone as well.
  double in_sum_without(NodeId w, NodeId excluded) const {
    double sum = 0.0;
    for (const Arc& a : graph_.in_edges(w)) {
      if (alive_[a.node] && a.node != excluded) sum += a.weight;
    }
    return sum;
  }

  // Nodes that turn deficient when u is deleted.
  std::size_t new_deficient_without(NodeId u) const {
    std::size_t count = 0;
    for (const Arc& a : graph_.out_edges(u)) {
      const NodeId w = a.node;
      if (removable(w) && graph_.barricade(w) > in_sum_without(w, u)) ++count;
    }
    return count;
  }

  // Live neighbors of u in either direction, ascending and deduplicated.
  std::vector<NodeId> live_neighbors(NodeId u) const {
    std::vector<NodeId> out;
    for (const Arc& a : graph_.out_edges(u)) {
      if (alive_[a.node]) out.push_back(a.node);
    }
    for (const Arc& a : graph_.in_edges(u)) {
      if (alive_[a.node]) out.push_back(a.node);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void remove(NodeId u, const std::vector<NodeId>& neighbors) {
    alive_[u] = false;
    for (NodeId w : neighbors) refresh(w);
  }

 private:
  void refresh(NodeId u) {
    double in = 0.0;
    for (const Arc& a : graph_.in_edges(u)) {
      if (alive_[a.node]) in += a.weight;
    }
    double out = 0.0;
    for (const Arc& a : graph_.out_edges(u)) {
      if (alive_[a.node]) out += a.weight;
    }
    in_sum_[u] = in;
    strength_[u] = in + out;
  }

  const Graph& graph_;
  std::vector<bool> alive_;
  std::vector<double> in_sum_;
  std::vector<double> strength_;
};

// Keeps the entries of `ties` whose score is minimal.
template <typename Score>
void keep_minimal(std::vector<NodeId>& ties, Score&& score) {
  if (ties.size() <= 1) return;
  std::vector<std::size_t> scores(ties.size());
  for (std::size_t i = 0; i < ties.size(); ++i) scores[i] = score(ties[i]);
  const std::size_t best = *std::min_element(scores.begin(), scores.end());
  std::vector<NodeId> kept;
  for (std::size_t i = 0; i < ties.size(); ++i) {
    if (scores[i] == best) kept.push_back(ties[i]);
  }
  ties.swap(kept);
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

SolverReport mss(const Graph& graph, std::uint64_t rng_seed) {
  const auto start = Clock::now();
  Rng rng(rng_seed);
  ShrinkingGraph work(graph);

  // Removable nodes ordered by (incident weight, id).
  std::set<std::pair<double, NodeId>> candidates;
  for (NodeId u : graph.nodes()) {
    if (work.removable(u)) candidates.insert({work.strength(u), u});
  }

  std::vector<NodeId> removed;
  std::vector<NodeId> ties;
  while (!candidates.empty()) {
    const double lightest = candidates.begin()->first;
    ties.clear();
    for (auto it = candidates.begin(); it != candidates.end() && it->first == lightest; ++it) {
      ties.push_back(it->second);
    }
    if (ties.size() > 1) {
      const auto components = nontrivial_components_after_removal(graph, work.alive());
      keep_minimal(ties, [&](NodeId u) { return components[u]; });
    }
    keep_minimal(ties, [&](NodeId u) { return work.new_deficient_without(u); });

    const NodeId q = ties[ties.size() == 1 ? 0 : rng.index(ties.size())];
    const std::vector<NodeId> neighbors = work.live_neighbors(q);
    candidates.erase({work.strength(q), q});
    for (NodeId w : neighbors) candidates.erase({work.strength(w), w});
    work.remove(q, neighbors);
    removed.push_back(q);
    // only q's neighbors can enter or leave the candidate set
    for (NodeId w : neighbors) {
      if (work.removable(w)) candidates.insert({work.strength(w), w});
    }
  }

  std::vector<NodeId> remaining;
  for (NodeId u : graph.nodes()) {
    if (work.alive()[u]) remaining.push_back(u);
  }

  SolverReport report;
  report.algorithm = "mss";
  report.seeds = SeedSet(std::move(remaining));
  report.wall_time_s = seconds_since(start);
  report.rng_seed = rng_seed;
  report.removal_sequence = std::move(removed);
  report.sigma = sigma(graph, report.seeds);
  return report;
}

SolverReport sim(const Graph& graph, std::size_t k, std::uint64_t rng_seed) {
  if (k == 0) throw ValidationError("budget k must be >= 1");
  const auto start = Clock::now();
  SolverReport base = mss(graph, rng_seed);
  std::vector<NodeId> seeds(base.seeds.begin(), base.seeds.end());

  CascadeEngine engine(graph);
  std::vector<NodeId> trial;
  while (seeds.size() > k) {
    std::size_t best_index = 0;
    std::size_t best_sigma = 0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      trial.assign(seeds.begin(), seeds.end());
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t s = engine.sigma(trial);
      // seeds are ascending, so strict > keeps the smallest id on ties
      if (i == 0 || s > best_sigma) {
        best_sigma = s;
        best_index = i;
      }
    }
    seeds.erase(seeds.begin() + static_cast<std::ptrdiff_t>(best_index));
  }

  SolverReport report;
  report.algorithm = "sim";
  report.seeds = SeedSet(std::move(seeds));
  report.wall_time_s = seconds_since(start);
  report.rng_seed = rng_seed;
  report.sigma = sigma(graph, report.seeds);
  return report;
}

namespace {

SolverReport hill_climb(const Graph& graph, std::size_t max_picks, bool until_full, std::string name) {
  const auto start = Clock::now();
  CascadeEngine engine(graph);
  const std::vector<NodeId> nodes = graph.nodes();
  std::vector<bool> active(graph.id_bound(), false);
  std::vector<bool> chosen(graph.id_bound(), false);
  std::size_t active_count = engine.close(active);
  std::vector<NodeId> seeds;

  while (seeds.size() < max_picks && !(until_full && active_count == graph.node_count())) {
    NodeId best = 0;
    std::size_t best_size = 0;
    bool have = false;
    for (NodeId u : nodes) {
      if (chosen[u]) continue;
      const std::size_t size = engine.closure_size_with(active, active_count, u);
      if (!have || size > best_size) {
        have = true;
        best = u;
        best_size = size;
      }
    }
    if (!have) break;
    chosen[best] = true;
    seeds.push_back(best);
    active[best] = true;
    active_count = engine.close(active);
  }

  SolverReport report;
  report.algorithm = std::move(name);
  report.seeds = SeedSet(std::move(seeds));
  report.wall_time_s = seconds_since(start);
  report.sigma = sigma(graph, report.seeds);
  return report;
}

}  // namespace

SolverReport greedy(const Graph& graph, std::size_t k) {
  if (k == 0) throw ValidationError("budget k must be >= 1");
  return hill_climb(graph, k, false, "greedy");
}

SolverReport greedy_full(const Graph& graph) {
  return hill_climb(graph, graph.node_count(), true, "greedy");
}

SolverReport optimal_exhaustive(const Graph& graph, std::size_t k, std::size_t max_nodes,
                                std::uint64_t max_subsets) {
  if (k == 0) throw ValidationError("budget k must be >= 1");
  const std::vector<NodeId> nodes = graph.nodes();
  if (nodes.size() > max_nodes) {
    throw GuardError("optimal search limited to " + std::to_string(max_nodes) + " nodes, graph has " +
                     std::to_string(nodes.size()));
  }
  const std::size_t r = std::min(k, nodes.size());
  const std::uint64_t subsets = binomial(nodes.size(), r);
  if (subsets > max_subsets) {
    throw GuardError("optimal search needs " + std::to_string(subsets) + " subsets, budget is " +
                     std::to_string(max_subsets));
  }

  const auto start = Clock::now();
  CascadeEngine engine(graph);
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<NodeId> current(r), best;
  std::size_t best_sigma = 0;
  bool have = false;
  const std::size_t n = nodes.size();
  while (true) {
    for (std::size_t i = 0; i < r; ++i) current[i] = nodes[idx[i]];
    const std::size_t s = engine.sigma(current);
    if (!have || s > best_sigma) {
      have = true;
      best_sigma = s;
      best = current;
      if (s == n) break;
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }

  SolverReport report;
  report.algorithm = "opt";
  report.seeds = SeedSet(std::move(best));
  report.wall_time_s = seconds_since(start);
  report.sigma = best_sigma;
  return report;
}

SolverReport optimal_full(const Graph& graph, std::size_t max_nodes) {
  const auto start = Clock::now();
  SolverReport report;
  report.algorithm = "opt";
  report.seeds = min_full_seed_exhaustive(graph, max_nodes);
  report.wall_time_s = seconds_since(start);
  report.sigma = sigma(graph, report.seeds);
  return report;
}

}  // namespace barricade
