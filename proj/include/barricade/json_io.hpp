#pragma once

#include <filesystem>

#include "json.hpp"

#include "barricade/cascade.hpp"
#include "barricade/generators.hpp"
#include "barricade/harness.hpp"
#include "barricade/solvers.hpp"

namespace barricade {

using nlohmann::json;

/// {"steps": [[...], ...], "sigma": n}
json trace_to_json(const CascadeTrace& trace);

/// {"algorithm", "seeds", "sigma", "wall_time_s", "rng_seed"[, "removal_sequence"]}.
/// rng_seed is null for algorithms that do not use one.
json report_to_json(const SolverReport& report, bool include_timing = true);

/// Keys: model ("rg" | "er" | "power_law"), n, density_target, mean_degree
/// (optional), weight_range [lo, hi], barricade_range [lo, hi], rng_seed.
GenSpec genspec_from_json(const json& j);
json genspec_to_json(const GenSpec& spec);

/// Relative file paths in a "files" graph source resolve against base_dir.
/// Throws ValidationError on unknown values or missing keys.
ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir = {});

}  // namespace barricade
