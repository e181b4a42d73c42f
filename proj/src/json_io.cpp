#include "barricade/json_io.hpp"

#include <string>
#include <type_traits>

#include "barricade/errors.hpp"

namespace barricade {

namespace {

Range range_from_json(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(std::string(key) + " must be a [lo, hi] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
T number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw ValidationError(std::string("'") + key + "' must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || (std::is_unsigned_v<T> && !v.is_number_unsigned() && v.get<long long>() < 0)) {
      throw ValidationError(std::string("'") + key + "' must be a non-negative integer");
    }
  }
  return v.get<T>();
}

GraphModel model_from_string(const std::string& s) {
  if (s == "rg") return GraphModel::rg;
  if (s == "er") return GraphModel::er;
  if (s == "power_law") return GraphModel::power_law;
  throw ValidationError("unknown graph model '" + s + "'");
}

std::string model_name(GraphModel m) {
  switch (m) {
    case GraphModel::rg:
      return "rg";
    case GraphModel::er:
      return "er";
    case GraphModel::power_law:
      return "power_law";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "mss") return Algorithm::mss;
  if (s == "sim") return Algorithm::sim;
  if (s == "greedy") return Algorithm::greedy;
  if (s == "opt") return Algorithm::opt;
  throw ValidationError("unknown algorithm '" + s + "'");
}

SweepKind sweep_from_string(const std::string& s) {
  if (s == "budget") return SweepKind::budget;
  if (s == "density") return SweepKind::density;
  if (s == "barricade") return SweepKind::barricade;
  throw ValidationError("unknown sweep '" + s + "'");
}

}  // namespace

json trace_to_json(const CascadeTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) steps.push_back(step);
  return {{"steps", std::move(steps)}, {"sigma", trace.sigma}};
}

json report_to_json(const SolverReport& report, bool include_timing) {
  json j;
  j["algorithm"] = report.algorithm;
  j["seeds"] = std::vector<NodeId>(report.seeds.begin(), report.seeds.end());
  j["sigma"] = report.sigma;
  j["wall_time_s"] = include_timing ? report.wall_time_s : 0.0;
  j["rng_seed"] = report.rng_seed ? json(*report.rng_seed) : json(nullptr);
  if (report.removal_sequence) j["removal_sequence"] = *report.removal_sequence;
  return j;
}

GenSpec genspec_from_json(const json& j) {
  GenSpec spec;
  const json& model = require(j, "model");
  if (!model.is_string()) throw ValidationError("'model' must be a string");
  spec.model = model_from_string(model.get<std::string>());
  spec.n = number<std::size_t>(j, "n");
  spec.density = number<double>(j, "density_target");
  if (j.contains("mean_degree")) spec.mean_degree = number<double>(j, "mean_degree");
  spec.weight_range = j.contains("weight_range") ? range_from_json(j.at("weight_range"), "weight_range") : Range{1, 1};
  spec.barricade_range = range_from_json(require(j, "barricade_range"), "barricade_range");
  spec.rng_seed = j.contains("rng_seed") ? number<std::uint64_t>(j, "rng_seed") : 0;
  return spec;
}

json genspec_to_json(const GenSpec& spec) {
  return {{"model", model_name(spec.model)},
          {"n", spec.n},
          {"density_target", spec.density},
          {"mean_degree", spec.mean_degree},
          {"weight_range", {spec.weight_range.lo, spec.weight_range.hi}},
          {"barricade_range", {spec.barricade_range.lo, spec.barricade_range.hi}},
          {"rng_seed", spec.rng_seed}};
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  ExperimentConfig config;
  const json& source = require(j, "graph_source");
  if (source.contains("generator")) {
    config.graph_source = genspec_from_json(source.at("generator"));
  } else if (source.contains("files")) {
    const json& files = source.at("files");
    FileSource fs;
    auto resolve = [&](const std::string& p) {
      std::filesystem::path path(p);
      return (path.is_relative() && !base_dir.empty() ? base_dir / path : path).string();
    };
    fs.graph_path = resolve(require(files, "graph").get<std::string>());
    if (files.contains("barricades")) fs.barricades_path = resolve(files.at("barricades").get<std::string>());
    if (files.contains("weight_range")) fs.weight_range = range_from_json(files.at("weight_range"), "weight_range");
    if (files.contains("barricade_range")) {
      fs.barricade_range = range_from_json(files.at("barricade_range"), "barricade_range");
    }
    config.graph_source = fs;
  } else {
    throw ValidationError("graph_source needs a 'generator' or 'files' entry");
  }

  config.sweep = sweep_from_string(require(j, "sweep").get<std::string>());
  const json& values = require(j, "sweep_values");
  if (!values.is_array()) throw ValidationError("sweep_values must be an array");
  for (const json& v : values) {
    if (config.sweep == SweepKind::barricade) {
      config.sweep_values.emplace_back(range_from_json(v, "sweep_values entry"));
    } else {
      if (!v.is_number()) throw ValidationError("sweep_values entries must be numbers");
      config.sweep_values.emplace_back(v.get<double>());
    }
  }
  const json& algos = require(j, "algorithms");
  if (!algos.is_array()) throw ValidationError("algorithms must be an array");
  for (const json& a : algos) config.algorithms.push_back(algorithm_from_string(a.get<std::string>()));
  config.replications = number<std::size_t>(j, "replications");
  config.rng_seed = number<std::uint64_t>(j, "rng_seed");
  if (j.contains("opt_guard")) {
    const json& g = j.at("opt_guard");
    if (g.contains("max_nodes")) config.opt_guard.max_nodes = number<std::size_t>(g, "max_nodes");
    if (g.contains("max_subsets")) config.opt_guard.max_subsets = number<std::uint64_t>(g, "max_subsets");
  }
  return config;
}

}  // namespace barricade
