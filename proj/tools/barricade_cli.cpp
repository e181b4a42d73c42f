// barricade: command line front end for the barricade library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "barricade/cascade.hpp"
#include "barricade/errors.hpp"
#include "barricade/generators.hpp"
#include "barricade/harness.hpp"
#include "barricade/ingest.hpp"
#include "barricade/io.hpp"
#include "barricade/json_io.hpp"
#include "barricade/rng.hpp"
#include "barricade/solvers.hpp"
#include "barricade/validation.hpp"

namespace fs = std::filesystem;
using namespace barricade;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  return out;
}

// Writes to `path`, or stdout when it is empty.
void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  auto out = open_out(path);
  out << text;
}

Graph load_graph(const std::string& graph_path, const std::string& barricades_path, double default_barricade) {
  auto in = open_in(graph_path);
  Graph g = load_edge_list(in, default_barricade);
  if (!barricades_path.empty()) {
    auto b = open_in(barricades_path);
    g = load_barricades(g, b);
  }
  return g;
}

void write_graph_files(const Graph& g, const std::string& prefix) {
  auto edges = open_out(prefix + ".edges");
  write_edge_list(g, edges);
  auto barricades = open_out(prefix + ".barricades");
  write_barricades(g, barricades);
}

Range parse_range(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw ValidationError(std::string(what) + " needs two values");
  return {v[0], v[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influence maximization under the barricade threshold model"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Write wall times as 0 so outputs are byte-reproducible");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one seed-selection algorithm on a graph");
  std::string algo = "mss";
  std::optional<std::size_t> k;
  std::uint64_t rng_seed = 0;
  std::string graph_path, barricades_path, out_path;
  double default_barricade = 1.0;
  solve->add_option("--algo", algo, "mss | sim | greedy | opt")
      ->check(CLI::IsMember({"mss", "sim", "greedy", "opt"}));
  solve->add_option("--k", k, "Seed budget; greedy and opt without it aim for full influence");
  solve->add_option("--rng-seed", rng_seed);
  solve->add_option("--graph", graph_path, "Edge list `u v [w]`")->required();
  solve->add_option("--barricades", barricades_path, "`u b` lines");
  solve->add_option("--default-barricade", default_barricade, "Barricade of nodes not listed");
  solve->add_option("--out", out_path, "Report JSON (stdout if omitted)");

  // cascade
  auto* cascade = app.add_subcommand("cascade", "Trace the diffusion from a seed set");
  std::vector<NodeId> seeds;
  cascade->add_option("--graph", graph_path)->required();
  cascade->add_option("--barricades", barricades_path);
  cascade->add_option("--default-barricade", default_barricade);
  cascade->add_option("--seeds", seeds, "Seed ids")->delimiter(',');
  cascade->add_option("--out", out_path);

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Draw a synthetic graph from a GenSpec JSON");
  std::string spec_path, out_prefix;
  std::optional<std::uint64_t> seed_override;
  generate_cmd->add_option("--spec", spec_path, "GenSpec JSON file")->required();
  generate_cmd->add_option("--rng-seed", seed_override, "Overrides the spec's rng_seed");
  generate_cmd->add_option("--out-prefix", out_prefix, "Writes PREFIX.edges and PREFIX.barricades")->required();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Read a SNAP edge list, sample it and draw parameters");
  std::string input_path, method = "bfs_ball";
  bool bidirected = false;
  std::optional<std::size_t> sample_n;
  std::vector<double> weight_range{1.0, 2.0}, barricade_range{5.0, 10.0};
  ingest->add_option("--input", input_path)->required();
  ingest->add_flag("--bidirected", bidirected, "Each record yields both directions");
  ingest->add_option("--sample-n", sample_n, "Sample size; the whole graph if omitted");
  ingest->add_option("--method", method)->check(CLI::IsMember({"bfs_ball", "uniform_node_induced"}));
  ingest->add_option("--rng-seed", rng_seed);
  ingest->add_option("--weight-range", weight_range)->expected(2);
  ingest->add_option("--barricade-range", barricade_range)->expected(2);
  ingest->add_option("--out-prefix", out_prefix, "Writes PREFIX.edges, PREFIX.barricades, PREFIX.ids")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a sweep described by a JSON config");
  std::string config_path, out_dir;
  std::size_t workers = 1;
  bool summary = false;
  experiment->add_option("--config", config_path)->required();
  experiment->add_option("--out", out_dir, "Output directory")->required();
  experiment->add_option("--workers", workers)->check(CLI::PositiveNumber);
  experiment->add_flag("--summary", summary, "Also write per-point means to summary.csv");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Randomized structural property checks");
  std::size_t trials = 200;
  validate_cmd->add_option("--trials", trials);
  validate_cmd->add_option("--rng-seed", rng_seed);
  validate_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);
  const bool timing = !no_timing;

  try {
    if (*solve) {
      const Graph g = load_graph(graph_path, barricades_path, default_barricade);
      SolverReport report;
      if (algo == "mss") {
        report = mss(g, rng_seed);
      } else if (algo == "sim") {
        if (!k) throw ValidationError("sim needs --k");
        report = sim(g, *k, rng_seed);
      } else if (algo == "greedy") {
        report = k ? greedy(g, *k) : greedy_full(g);
      } else {
        report = k ? optimal_exhaustive(g, *k) : optimal_full(g);
      }
      write_text(out_path, report_to_json(report, timing).dump(1) + "\n");
    } else if (*cascade) {
      const Graph g = load_graph(graph_path, barricades_path, default_barricade);
      write_text(out_path, trace_to_json(run_cascade(g, SeedSet(seeds))).dump(1) + "\n");
    } else if (*generate_cmd) {
      auto in = open_in(spec_path);
      GenSpec spec = genspec_from_json(json::parse(in));
      if (seed_override) spec.rng_seed = *seed_override;
      write_graph_files(generate(spec), out_prefix);
    } else if (*ingest) {
      auto in = open_in(input_path);
      const IngestResult raw = ingest_snap(in, bidirected ? Directedness::bidirected : Directedness::directed);
      Graph g = raw.graph;
      std::vector<NodeId> kept = g.nodes();
      if (sample_n) {
        SampleSpec spec;
        spec.target_nodes = *sample_n;
        spec.method = method == "bfs_ball" ? SampleMethod::bfs_ball : SampleMethod::uniform_node_induced;
        spec.rng_seed = rng_seed;
        Subgraph sample = sample_subgraph(g, spec);
        g = std::move(sample.graph);
        kept = std::move(sample.parent_ids);
      }
      g = assign_params(g, parse_range(weight_range, "--weight-range"), parse_range(barricade_range, "--barricade-range"),
                        derive_seed(rng_seed, 1));
      write_graph_files(g, out_prefix);
      auto ids = open_out(out_prefix + ".ids");
      for (std::size_t i = 0; i < kept.size(); ++i) ids << i << ' ' << raw.original_ids[kept[i]] << '\n';
    } else if (*experiment) {
      auto in = open_in(config_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed config: ") + e.what());
      }
      const ExperimentConfig config = config_from_json(j, fs::path(config_path).parent_path());
      const ExperimentResult result = run_experiment(config, workers);
      const fs::path dir(out_dir);
      {
        auto csv = open_out(dir / "results.csv");
        emit_csv(result, csv, timing);
        auto js = open_out(dir / "results.json");
        emit_json(result, js, timing);
      }
      if (summary) {
        auto out = open_out(dir / "summary.csv");
        emit_summary_csv(summarize(result), out, timing);
      }
    } else if (*validate_cmd) {
      json suites = json::array();
      bool all_passed = true;
      for (const SuiteResult& s : run_all_validators(trials, rng_seed)) {
        all_passed = all_passed && s.passed();
        suites.push_back({{"name", s.name},
                          {"trials", s.trials},
                          {"checked", s.checked},
                          {"violations", s.violations},
                          {"examples", s.examples},
                          {"result", s.passed() ? "pass" : "fail"}});
      }
      json report = {{"result", all_passed ? "pass" : "fail"}, {"suites", suites}};
      write_text(out_path, report.dump(1) + "\n");
      return all_passed ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
