#include "barricade/validation.hpp"

#include <algorithm>
#include <sstream>

#include "barricade/cascade.hpp"
#include "barricade/rng.hpp"
#include "barricade/structure.hpp"

namespace barricade {

namespace {

constexpr std::size_t kMaxExamples = 5;

double coarse_weight(Rng& rng) { return 0.5 * static_cast<double>(1 + rng.index(4)); }

// Multiple of 0.5 in [0.5, b), or 0 when none exists.
double weight_below(Rng& rng, double b) {
  const auto options = static_cast<std::uint64_t>(2.0 * b - 1.0 + 0.5);
  if (b <= 0.5 || options == 0) return 0.0;
  return 0.5 * static_cast<double>(1 + rng.index(options));
}

void record(SuiteResult& suite, std::uint64_t trial_seed, const std::string& detail) {
  ++suite.violations;
  if (suite.examples.size() < kMaxExamples) {
    suite.examples.push_back("trial_seed=" + std::to_string(trial_seed) + " " + detail);
  }
}

std::string describe(const NodeAddition& addition) {
  std::ostringstream out;
  out << "b_v=" << addition.barricade << " in=[";
  for (const Arc& a : addition.in) out << ' ' << a.node << ':' << a.weight;
  out << " ] out=[";
  for (const Arc& a : addition.out) out << ' ' << a.node << ':' << a.weight;
  out << " ]";
  return out.str();
}

}  // namespace

Graph random_small_graph(std::uint64_t seed, std::size_t min_nodes, std::size_t max_nodes) {
  Rng rng(seed);
  const std::size_t n = min_nodes + rng.index(max_nodes - min_nodes + 1);
  const double p = rng.uniform(0.15, 0.7);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(p)) edges.push_back({u, v, coarse_weight(rng)});
    }
  }
  std::vector<double> barricades(n);
  for (double& b : barricades) b = 0.5 * static_cast<double>(rng.index(7));
  return Graph(n, edges, std::move(barricades));
}

SuiteResult validate_deficient_membership(std::size_t trials, std::uint64_t seed) {
  SuiteResult suite{"deficient_membership", trials, 0, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const Graph g = random_small_graph(trial_seed, 1, 8);
    const std::vector<NodeId> deficient = influence_deficient(g).deficient;
    CascadeEngine engine(g);
    const std::size_t n = g.node_count();
    std::vector<NodeId> subset;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      subset.clear();
      for (NodeId u = 0; u < n; ++u) {
        if (mask >> u & 1u) subset.push_back(u);
      }
      if (engine.sigma(subset) != n) continue;
      ++suite.checked;
      if (!std::includes(subset.begin(), subset.end(), deficient.begin(), deficient.end())) {
        record(suite, trial_seed, "full seed set misses a deficient node");
      }
    }
  }
  return suite;
}

SuiteResult validate_edge_addition(std::size_t trials, std::uint64_t seed) {
  SuiteResult suite{"edge_addition", trials, 0, 0, {}};
  // complete graphs have no edge to add, so draw until enough were checked
  for (std::size_t t = 0; suite.checked < trials && t < 100 * trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const Graph g = random_small_graph(trial_seed, 2, 10);
    Rng rng(derive_seed(trial_seed, 1));
    std::vector<std::pair<NodeId, NodeId>> absent;
    for (NodeId u : g.nodes()) {
      for (NodeId v : g.nodes()) {
        if (u != v && !g.has_edge(u, v)) absent.emplace_back(u, v);
      }
    }
    if (absent.empty()) continue;
    const auto [v1, v2] = absent[rng.index(absent.size())];
    const double w12 = coarse_weight(rng);
    std::optional<double> w21;
    if (!g.has_edge(v2, v1) && rng.bernoulli(0.5)) w21 = coarse_weight(rng);
    const PerturbationBound bound = check_edge_addition_bound(g, v1, v2, w12, w21);
    ++suite.checked;
    if (!bound.holds()) {
      record(suite, trial_seed,
             "before=" + std::to_string(bound.before) + " observed=" + std::to_string(bound.observed));
    }
  }
  return suite;
}

SuiteResult validate_node_addition(std::size_t trials, std::uint64_t seed) {
  SuiteResult suite{"node_addition", trials, 0, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const Graph g = random_small_graph(trial_seed, 1, 9);
    Rng rng(derive_seed(trial_seed, 1));
    NodeAddition addition;
    // a node with b=0 activates unaided, outside the bound's scope
    addition.barricade = 0.5 * static_cast<double>(1 + rng.index(6));
    for (NodeId u : g.nodes()) {
      if (rng.bernoulli(0.4)) addition.in.push_back({u, coarse_weight(rng)});
      if (rng.bernoulli(0.4)) addition.out.push_back({u, coarse_weight(rng)});
    }
    const PerturbationBound bound = check_node_addition_bound(g, addition);
    ++suite.checked;
    if (!bound.holds()) {
      record(suite, trial_seed,
             "lower=" + std::to_string(bound.lower) + " observed=" + std::to_string(bound.observed) +
                 " upper=" + std::to_string(bound.upper));
    }
  }
  return suite;
}

SuiteResult validate_replacement(std::size_t trials, std::uint64_t seed, std::size_t max_draws) {
  SuiteResult suite{"replacement", trials, 0, 0, {}};
  for (std::size_t draw = 0; draw < max_draws && suite.checked < trials; ++draw) {
    const std::uint64_t trial_seed = derive_seed(seed, draw);
    const Graph g = random_small_graph(trial_seed, 2, 7);
    Rng rng(derive_seed(trial_seed, 1));
    const bool deficient_case = rng.bernoulli(0.5);

    NodeAddition addition;
    double total_in = 0.0;
    double lightest = 0.0;
    for (NodeId u : g.nodes()) {
      if (!rng.bernoulli(0.5)) continue;
      const double w = coarse_weight(rng);
      addition.in.push_back({u, w});
      total_in += w;
      lightest = addition.in.size() == 1 ? w : std::min(lightest, w);
    }
    for (NodeId u : g.nodes()) {
      const bool allowed = deficient_case || std::any_of(addition.in.begin(), addition.in.end(),
                                                         [&](const Arc& a) { return a.node == u; });
      if (!allowed || !rng.bernoulli(0.6)) continue;
      const double w = weight_below(rng, g.barricade(u));
      if (w > 0.0) addition.out.push_back({u, w});
    }
    if (deficient_case) {
      addition.barricade = total_in + 0.5 * static_cast<double>(1 + rng.index(2));
    } else {
      if (addition.in.empty()) continue;
      const auto steps = static_cast<std::uint64_t>(2.0 * lightest + 0.5);
      addition.barricade = total_in - lightest + 0.5 * static_cast<double>(1 + rng.index(steps));
    }
    if (classify_addition(g, addition) == AdditionCase::none) continue;

    const ReplacementCheck check = check_replacement(g, addition);
    ++suite.checked;
    if (!check.holds()) {
      std::ostringstream detail;
      detail << (check.premise == AdditionCase::deficient ? "deficient" : "just_sufficient")
             << " q_size=" << check.q_size << " before=" << check.before << " predicted=" << check.predicted
             << " observed=" << check.observed << ' ' << describe(addition);
      record(suite, trial_seed, detail.str());
    }
  }
  return suite;
}

std::vector<SuiteResult> run_all_validators(std::size_t trials, std::uint64_t seed) {
  return {validate_deficient_membership(trials, derive_seed(seed, 101)),
          validate_edge_addition(trials, derive_seed(seed, 102)),
          validate_node_addition(trials, derive_seed(seed, 103)),
          validate_replacement(trials, derive_seed(seed, 104))};
}

}  // namespace barricade
