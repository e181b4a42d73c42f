#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "barricade/generators.hpp"
#include "barricade/graph.hpp"

namespace barricade {

enum class SweepKind { budget, density, barricade };
enum class Algorithm { mss, sim, greedy, opt };

std::string to_string(SweepKind kind);
std::string to_string(Algorithm algorithm);

/// Fixed topology read from disk; parameters are redrawn per replication
/// when the ranges are set.
struct FileSource {
  std::string graph_path;
  std::optional<std::string> barricades_path;
  std::optional<Range> weight_range;
  std::optional<Range> barricade_range;
};

using GraphSource = std::variant<GenSpec, FileSource>;
/// Budget and density sweeps take numbers, barricade sweeps take ranges.
using SweepValue = std::variant<double, Range>;

struct OptGuard {
  std::size_t max_nodes = 16;
  std::uint64_t max_subsets = 20'000'000;
};

struct ExperimentConfig {
  GraphSource graph_source;
  SweepKind sweep = SweepKind::budget;
  std::vector<SweepValue> sweep_values;
  std::vector<Algorithm> algorithms;
  std::size_t replications = 1;
  std::uint64_t rng_seed = 0;
  OptGuard opt_guard;
};

struct ResultRow {
  std::string sweep_value;
  std::string algorithm;
  std::size_t replication = 0;
  std::string metric;  // "sigma" for budget sweeps, "seed_count" otherwise
  std::size_t sigma = 0;
  std::size_t seed_count = 0;
  double wall_time_s = 0.0;
  std::uint64_t rng_seed = 0;
  std::vector<NodeId> seeds;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
};

/// Throws ValidationError describing the first problem found. File sources
/// are loaded to check the opt guard.
void validate(const ExperimentConfig& config);

/// Runs the configured sweep. Replications and sweep points are spread over
/// `workers` threads; rows come back in canonical order (sweep value,
/// algorithm as configured, replication) whatever the scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config, std::size_t workers = 1);

ExperimentResult run_budget_sweep(const ExperimentConfig& config, std::size_t workers = 1);
ExperimentResult run_density_sweep(const ExperimentConfig& config, std::size_t workers = 1);
ExperimentResult run_barricade_sweep(const ExperimentConfig& config, std::size_t workers = 1);

/// Seed of replication r; independent of the replication count.
std::uint64_t replication_seed(std::uint64_t base, std::size_t replication);

std::string format_sweep_value(const SweepValue& value);

inline constexpr const char* kCsvHeader = "sweep_value,algorithm,replication,metric,sigma,seed_count,wall_time_s,rng_seed";

/// With include_timing false, wall times are written as 0 so reruns are byte-identical.
void emit_csv(const ExperimentResult& result, std::ostream& out, bool include_timing = true);
void emit_json(const ExperimentResult& result, std::ostream& out, bool include_timing = true);
ExperimentResult parse_result_json(std::istream& in);

struct SummaryRow {
  std::string sweep_value;
  std::string algorithm;
  std::size_t replications = 0;
  double mean_sigma = 0.0;
  double mean_seed_count = 0.0;
  double mean_wall_time_s = 0.0;
};

/// Per (sweep value, algorithm) means, in first-appearance order.
std::vector<SummaryRow> summarize(const ExperimentResult& result);
void emit_summary_csv(const std::vector<SummaryRow>& summary, std::ostream& out, bool include_timing = true);

}  // namespace barricade
