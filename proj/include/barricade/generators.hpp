#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "barricade/graph.hpp"

namespace barricade {

enum class GraphModel { rg, er, power_law };

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/**
 * Recipe for a synthetic graph. `density` is model specific:
 *  - rg: expected number of directed edges,
 *  - er: probability of each ordered pair,
 *  - power_law: degree exponent (> 1); `mean_degree` sets the expected
 *    undirected degree.
 */
struct GenSpec {
  GraphModel model = GraphModel::rg;
  std::size_t n = 1;
  double density = 0.0;
  double mean_degree = 10.0;
  Range weight_range{1.0, 1.0};
  Range barricade_range{0.0, 0.0};
  std::uint64_t rng_seed = 0;
};

/// Probability that two uniform points of the unit square lie within distance d.
double unit_square_distance_cdf(double d);

/// Radius whose expected directed edge count over n uniform points equals
/// `target_directed_edges`, found by bisection to relative tolerance 1e-6.
double calibrate_theta(std::size_t n, double target_directed_edges);

Graph gen_rg(const GenSpec& spec);
/// Random geometric graph with an explicit radius.
Graph gen_rg_with_theta(const GenSpec& spec, double theta);
Graph gen_er(const GenSpec& spec);
Graph gen_power_law(const GenSpec& spec);
Graph generate(const GenSpec& spec);

/// Chung-Lu target degrees w_i proportional to (i + 1)^(-1/(gamma-1)),
/// scaled so their mean is mean_degree.
std::vector<double> chung_lu_weights(std::size_t n, double gamma, double mean_degree);
/// Expected directed edge count of the bidirected Chung-Lu graph.
double chung_lu_expected_edges(std::size_t n, double gamma, double mean_degree);

/// Fresh i.i.d. uniform weights (edge order of Graph::edges) and barricades.
Graph assign_params(const Graph& graph, Range weight_range, Range barricade_range, std::uint64_t rng_seed);

}  // namespace barricade
