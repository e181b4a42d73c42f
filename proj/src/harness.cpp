#include "barricade/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "barricade/errors.hpp"
#include "barricade/io.hpp"
#include "barricade/rng.hpp"
#include "barricade/solvers.hpp"

namespace barricade {

namespace {

bool is_full_sweep(SweepKind kind) { return kind != SweepKind::budget; }

Graph load_file_source(const FileSource& fs) {
  std::ifstream edges(fs.graph_path);
  if (!edges) throw ValidationError("cannot open graph file '" + fs.graph_path + "'");
  Graph g = load_edge_list(edges, 0.0);
  if (fs.barricades_path) {
    std::ifstream b(*fs.barricades_path);
    if (!b) throw ValidationError("cannot open barricade file '" + *fs.barricades_path + "'");
    g = load_barricades(g, b);
  }
  return g;
}

std::size_t source_node_count(const GraphSource& source) {
  if (const auto* spec = std::get_if<GenSpec>(&source)) return spec->n;
  return load_file_source(std::get<FileSource>(source)).node_count();
}

std::vector<double> edge_weights(const Graph& g) {
  std::vector<double> w;
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  return w;
}

std::size_t budget_of(const SweepValue& value) { return static_cast<std::size_t>(std::get<double>(value)); }

// Graph used for (sweep value, replication).
Graph instance_graph(const ExperimentConfig& config, const Graph* file_graph, const SweepValue& value,
                     std::uint64_t rep_seed) {
  if (const auto* base = std::get_if<GenSpec>(&config.graph_source)) {
    GenSpec spec = *base;
    spec.rng_seed = rep_seed;
    switch (config.sweep) {
      case SweepKind::budget:
        return generate(spec);
      case SweepKind::density:
        spec.density = std::get<double>(value);
        return generate(spec);
      case SweepKind::barricade: {
        // same topology for every range; only parameters are redrawn
        Graph topology = generate(spec);
        return assign_params(topology, spec.weight_range, std::get<Range>(value), derive_seed(rep_seed, 1));
      }
    }
  }
  const auto& fs = std::get<FileSource>(config.graph_source);
  const Graph& g = *file_graph;
  std::optional<Range> barricades = fs.barricade_range;
  if (config.sweep == SweepKind::barricade) barricades = std::get<Range>(value);
  if (!fs.weight_range && !barricades) return g;
  const Graph drawn = assign_params(g, fs.weight_range.value_or(Range{1.0, 1.0}), barricades.value_or(Range{0.0, 0.0}),
                                    derive_seed(rep_seed, 1));
  // keep whatever the files supplied for parameters without a range
  const Graph weighted = fs.weight_range ? drawn : drawn.with_weights(edge_weights(g));
  return barricades ? weighted : weighted.with_barricades(std::vector<double>(g.barricades().begin(), g.barricades().end()));
}

ResultRow run_one(const ExperimentConfig& config, const Graph& graph, Algorithm algorithm, const SweepValue& value,
                  std::size_t replication, std::uint64_t rep_seed) {
  SolverReport report;
  if (config.sweep == SweepKind::budget) {
    const std::size_t k = budget_of(value);
    switch (algorithm) {
      case Algorithm::sim:
        report = sim(graph, k, rep_seed);
        break;
      case Algorithm::greedy:
        report = greedy(graph, k);
        break;
      case Algorithm::opt:
        report = optimal_exhaustive(graph, k, config.opt_guard.max_nodes, config.opt_guard.max_subsets);
        break;
      case Algorithm::mss:
        throw ValidationError("mss has no budget; use it in density or barricade sweeps");
    }
  } else {
    switch (algorithm) {
      case Algorithm::mss:
        report = mss(graph, rep_seed);
        break;
      case Algorithm::greedy:
        report = greedy_full(graph);
        break;
      case Algorithm::opt:
        report = optimal_full(graph, config.opt_guard.max_nodes);
        break;
      case Algorithm::sim:
        throw ValidationError("sim needs a budget; use it in budget sweeps");
    }
  }
  ResultRow row;
  row.sweep_value = format_sweep_value(value);
  row.algorithm = to_string(algorithm);
  row.replication = replication;
  row.metric = config.sweep == SweepKind::budget ? "sigma" : "seed_count";
  row.sigma = report.sigma;
  row.seed_count = report.seeds.size();
  row.wall_time_s = report.wall_time_s;
  row.rng_seed = rep_seed;
  row.seeds.assign(report.seeds.begin(), report.seeds.end());
  return row;
}

}  // namespace

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::budget:
      return "budget";
    case SweepKind::density:
      return "density";
    case SweepKind::barricade:
      return "barricade";
  }
  return "?";
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::mss:
      return "mss";
    case Algorithm::sim:
      return "sim";
    case Algorithm::greedy:
      return "greedy";
    case Algorithm::opt:
      return "opt";
  }
  return "?";
}

std::uint64_t replication_seed(std::uint64_t base, std::size_t replication) {
  return derive_seed(base, replication);
}

std::string format_sweep_value(const SweepValue& value) {
  if (const auto* r = std::get_if<Range>(&value)) return format_double(r->lo) + ":" + format_double(r->hi);
  return format_double(std::get<double>(value));
}

void validate(const ExperimentConfig& config) {
  if (config.replications < 1) throw ValidationError("replications must be >= 1");
  if (config.sweep_values.empty()) throw ValidationError("sweep_values must not be empty");
  if (config.algorithms.empty()) throw ValidationError("algorithms must not be empty");
  for (Algorithm a : config.algorithms) {
    if (config.sweep == SweepKind::budget && a == Algorithm::mss) {
      throw ValidationError("mss has no budget; use sim in budget sweeps");
    }
    if (is_full_sweep(config.sweep) && a == Algorithm::sim) {
      throw ValidationError("sim needs a budget; use mss in " + to_string(config.sweep) + " sweeps");
    }
  }
  const bool from_files = std::holds_alternative<FileSource>(config.graph_source);
  if (from_files && config.sweep == SweepKind::density) {
    throw ValidationError("density sweeps need a generator graph source");
  }
  if (const auto* spec = std::get_if<GenSpec>(&config.graph_source)) {
    if (spec->n < 1) throw ValidationError("n must be >= 1");
  }

  for (const SweepValue& v : config.sweep_values) {
    switch (config.sweep) {
      case SweepKind::budget: {
        const double k = std::get<double>(v);
        if (!(k >= 1.0) || k != std::floor(k)) throw ValidationError("budgets must be positive integers");
        break;
      }
      case SweepKind::density: {
        const double d = std::get<double>(v);
        const auto& spec = std::get<GenSpec>(config.graph_source);
        const double pairs = static_cast<double>(spec.n) * static_cast<double>(spec.n - 1);
        if (spec.model == GraphModel::rg && !(d >= 0.0 && d <= pairs)) {
          throw ValidationError("rg density " + format_double(d) + " outside [0, n(n-1)]");
        }
        if (spec.model == GraphModel::er && !(d >= 0.0 && d <= 1.0)) {
          throw ValidationError("er density must be a probability");
        }
        if (spec.model == GraphModel::power_law && !(d > 1.0)) {
          throw ValidationError("power-law exponent must be > 1");
        }
        break;
      }
      case SweepKind::barricade: {
        const Range r = std::get<Range>(v);
        if (!(r.lo >= 0.0) || r.lo > r.hi) throw ValidationError("barricade ranges need 0 <= lo <= hi");
        break;
      }
    }
  }

  if (std::find(config.algorithms.begin(), config.algorithms.end(), Algorithm::opt) != config.algorithms.end()) {
    const std::size_t n = source_node_count(config.graph_source);
    if (n > config.opt_guard.max_nodes) {
      throw ValidationError("opt requested on " + std::to_string(n) + " nodes, guard allows " +
                            std::to_string(config.opt_guard.max_nodes));
    }
    if (config.sweep == SweepKind::budget) {
      for (const SweepValue& v : config.sweep_values) {
        const std::size_t k = std::min(budget_of(v), n);
        if (binomial(n, k) > config.opt_guard.max_subsets) {
          throw ValidationError("opt at k=" + std::to_string(k) + " needs " + std::to_string(binomial(n, k)) +
                                " subsets, guard allows " + std::to_string(config.opt_guard.max_subsets));
        }
      }
    }
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::size_t workers) {
  validate(config);
  std::optional<Graph> file_graph;
  if (const auto* fs = std::get_if<FileSource>(&config.graph_source)) file_graph = load_file_source(*fs);

  const std::size_t values = config.sweep_values.size();
  const std::size_t reps = config.replications;
  const std::size_t algos = config.algorithms.size();
  // slot (value, algorithm, replication) in canonical order
  std::vector<ResultRow> rows(values * algos * reps);

  std::atomic<std::size_t> next_task{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= values * reps) return;
      const std::size_t vi = task / reps;
      const std::size_t r = task % reps;
      try {
        const std::uint64_t seed = replication_seed(config.rng_seed, r);
        const Graph graph = instance_graph(config, file_graph ? &*file_graph : nullptr, config.sweep_values[vi], seed);
        for (std::size_t ai = 0; ai < algos; ++ai) {
          rows[(vi * algos + ai) * reps + r] = run_one(config, graph, config.algorithms[ai], config.sweep_values[vi], r, seed);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  workers = std::max<std::size_t>(1, std::min(workers, values * reps));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return {std::move(rows)};
}

ExperimentResult run_budget_sweep(const ExperimentConfig& config, std::size_t workers) {
  if (config.sweep != SweepKind::budget) throw ValidationError("config is not a budget sweep");
  return run_experiment(config, workers);
}

ExperimentResult run_density_sweep(const ExperimentConfig& config, std::size_t workers) {
  if (config.sweep != SweepKind::density) throw ValidationError("config is not a density sweep");
  return run_experiment(config, workers);
}

ExperimentResult run_barricade_sweep(const ExperimentConfig& config, std::size_t workers) {
  if (config.sweep != SweepKind::barricade) throw ValidationError("config is not a barricade sweep");
  return run_experiment(config, workers);
}

void emit_csv(const ExperimentResult& result, std::ostream& out, bool include_timing) {
  out << kCsvHeader << '\n';
  for (const ResultRow& row : result.rows) {
    out << row.sweep_value << ',' << row.algorithm << ',' << row.replication << ',' << row.metric << ','
        << row.sigma << ',' << row.seed_count << ',' << (include_timing ? format_double(row.wall_time_s) : "0")
        << ',' << row.rng_seed << '\n';
  }
}

void emit_json(const ExperimentResult& result, std::ostream& out, bool include_timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ResultRow& row : result.rows) {
    rows.push_back({{"sweep_value", row.sweep_value},
                    {"algorithm", row.algorithm},
                    {"replication", row.replication},
                    {"metric", row.metric},
                    {"sigma", row.sigma},
                    {"seed_count", row.seed_count},
                    {"wall_time_s", include_timing ? row.wall_time_s : 0.0},
                    {"rng_seed", row.rng_seed},
                    {"seeds", row.seeds}});
  }
  out << rows.dump(1) << '\n';
}

ExperimentResult parse_result_json(std::istream& in) {
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed result json: ") + e.what());
  }
  if (!rows.is_array()) throw ValidationError("result json must be an array of rows");
  ExperimentResult result;
  for (const auto& j : rows) {
    ResultRow row;
    row.sweep_value = j.at("sweep_value").get<std::string>();
    row.algorithm = j.at("algorithm").get<std::string>();
    row.replication = j.at("replication").get<std::size_t>();
    row.metric = j.at("metric").get<std::string>();
    row.sigma = j.at("sigma").get<std::size_t>();
    row.seed_count = j.at("seed_count").get<std::size_t>();
    row.wall_time_s = j.at("wall_time_s").get<double>();
    row.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    row.seeds = j.at("seeds").get<std::vector<NodeId>>();
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::vector<SummaryRow> summarize(const ExperimentResult& result) {
  std::vector<SummaryRow> summary;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const ResultRow& row : result.rows) {
    auto key = std::make_pair(row.sweep_value, row.algorithm);
    auto [it, inserted] = index.emplace(key, summary.size());
    if (inserted) summary.push_back({row.sweep_value, row.algorithm, 0, 0.0, 0.0, 0.0});
    SummaryRow& s = summary[it->second];
    ++s.replications;
    s.mean_sigma += static_cast<double>(row.sigma);
    s.mean_seed_count += static_cast<double>(row.seed_count);
    s.mean_wall_time_s += row.wall_time_s;
  }
  for (SummaryRow& s : summary) {
    const double n = static_cast<double>(s.replications);
    s.mean_sigma /= n;
    s.mean_seed_count /= n;
    s.mean_wall_time_s /= n;
  }
  return summary;
}

void emit_summary_csv(const std::vector<SummaryRow>& summary, std::ostream& out, bool include_timing) {
  out << "sweep_value,algorithm,replications,mean_sigma,mean_seed_count,mean_wall_time_s\n";
  for (const SummaryRow& s : summary) {
    out << s.sweep_value << ',' << s.algorithm << ',' << s.replications << ',' << format_double(s.mean_sigma) << ','
        << format_double(s.mean_seed_count) << ',' << (include_timing ? format_double(s.mean_wall_time_s) : "0")
        << '\n';
  }
}

}  // namespace barricade
