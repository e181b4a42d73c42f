#include "barricade/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "barricade/errors.hpp"
#include "barricade/rng.hpp"

namespace barricade {

namespace {

void check_range(Range r, const char* name, bool positive) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
    throw ValidationError(std::string(name) + " range must satisfy lo <= hi");
  }
  if (positive ? !(r.lo > 0.0) : !(r.lo >= 0.0)) {
    throw ValidationError(std::string(name) + (positive ? " range must be positive" : " range must be >= 0"));
  }
}

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw ValidationError("n must be >= 1");
  check_range(spec.weight_range, "weight", true);
  check_range(spec.barricade_range, "barricade", false);
}

// Draws barricades after the topology so the same seed gives the same layout
// regardless of the parameter ranges.
Graph finish(std::size_t n, const std::vector<Edge>& edges, const GenSpec& spec, Rng& rng) {
  Graph topology(n, edges, 0.0);
  return assign_params(topology, spec.weight_range, spec.barricade_range, rng.next());
}

}  // namespace

double unit_square_distance_cdf(double d) {
  if (d <= 0.0) return 0.0;
  if (d >= std::numbers::sqrt2) return 1.0;
  const double d2 = d * d;
  if (d <= 1.0) return std::numbers::pi * d2 - 8.0 * d2 * d / 3.0 + d2 * d2 / 2.0;
  const double s = std::sqrt(d2 - 1.0);
  return 1.0 / 3.0 + 4.0 / 3.0 * (2.0 * d2 + 1.0) * s - d2 * d2 / 2.0 - 2.0 * d2 +
         2.0 * d2 * (std::asin(1.0 / d) - std::acos(1.0 / d));
}

double calibrate_theta(std::size_t n, double target) {
  const double pairs = static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0);
  if (!(target >= 0.0) || target > pairs) {
    throw ValidationError("target edge count " + std::to_string(target) + " outside [0, " + std::to_string(pairs) +
                          "]");
  }
  if (target == 0.0) return 0.0;
  if (target == pairs) return std::numbers::sqrt2;
  const double p = target / pairs;
  double lo = 0.0;
  double hi = std::numbers::sqrt2;
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (unit_square_distance_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Graph gen_rg_with_theta(const GenSpec& spec, double theta) {
  check_spec(spec);
  Rng rng(spec.rng_seed);
  std::vector<double> x(spec.n), y(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    x[i] = rng.uniform01();
    y[i] = rng.uniform01();
  }
  std::vector<Edge> edges;
  const double t2 = theta * theta;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      const double dx = x[u] - x[v];
      const double dy = y[u] - y[v];
      if (dx * dx + dy * dy <= t2) {
        edges.push_back({u, v, 1.0});
        edges.push_back({v, u, 1.0});
      }
    }
  }
  return finish(spec.n, edges, spec, rng);
}

Graph gen_rg(const GenSpec& spec) {
  check_spec(spec);
  return gen_rg_with_theta(spec, calibrate_theta(spec.n, spec.density));
}

Graph gen_er(const GenSpec& spec) {
  check_spec(spec);
  const double p = spec.density;
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must lie in [0, 1]");
  Rng rng(spec.rng_seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = 0; v < spec.n; ++v) {
      if (u != v && rng.bernoulli(p)) edges.push_back({u, v, 1.0});
    }
  }
  return finish(spec.n, edges, spec, rng);
}

std::vector<double> chung_lu_weights(std::size_t n, double gamma, double mean_degree) {
  if (!(gamma > 1.0)) throw ValidationError("power-law exponent must be > 1");
  if (!(mean_degree >= 0.0)) throw ValidationError("mean degree must be >= 0");
  std::vector<double> w(n);
  const double exponent = -1.0 / (gamma - 1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(static_cast<double>(i + 1), exponent);
    total += w[i];
  }
  const double scale = total > 0.0 ? mean_degree * static_cast<double>(n) / total : 0.0;
  for (double& wi : w) wi *= scale;
  return w;
}

double chung_lu_expected_edges(std::size_t n, double gamma, double mean_degree) {
  const auto w = chung_lu_weights(n, gamma, mean_degree);
  double total = 0.0;
  for (double wi : w) total += wi;
  if (total <= 0.0) return 0.0;
  double expected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) expected += std::min(1.0, w[i] * w[j] / total);
  }
  return 2.0 * expected;
}

Graph gen_power_law(const GenSpec& spec) {
  check_spec(spec);
  const auto w = chung_lu_weights(spec.n, spec.density, spec.mean_degree);
  double total = 0.0;
  for (double wi : w) total += wi;
  Rng rng(spec.rng_seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      const double p = total > 0.0 ? std::min(1.0, w[u] * w[v] / total) : 0.0;
      if (rng.bernoulli(p)) {
        edges.push_back({u, v, 1.0});
        edges.push_back({v, u, 1.0});
      }
    }
  }
  return finish(spec.n, edges, spec, rng);
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case GraphModel::rg:
      return gen_rg(spec);
    case GraphModel::er:
      return gen_er(spec);
    case GraphModel::power_law:
      return gen_power_law(spec);
  }
  throw ValidationError("unknown graph model");
}

Graph assign_params(const Graph& graph, Range weight_range, Range barricade_range, std::uint64_t rng_seed) {
  check_range(weight_range, "weight", true);
  check_range(barricade_range, "barricade", false);
  Rng rng(rng_seed);
  std::vector<double> weights(graph.edge_count());
  for (double& w : weights) w = rng.uniform(weight_range.lo, weight_range.hi);
  std::vector<double> barricades(graph.id_bound(), 0.0);
  for (NodeId u : graph.nodes()) barricades[u] = rng.uniform(barricade_range.lo, barricade_range.hi);
  return graph.with_weights(weights).with_barricades(std::move(barricades));
}

}  // namespace barricade
