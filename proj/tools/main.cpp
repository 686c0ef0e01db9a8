#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tiered/serialize.hpp"

namespace fs = std::filesystem;
using namespace tiered;

namespace {

json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return j;
}

void save_json(const json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--interval expects s,t");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--interval expects numeric s,t");
  }
}

int best_trial(const SavingsReport& report) {
  int best = 0;
  for (std::size_t t = 1; t < report.per_trial.size(); ++t) {
    if (report.per_trial[t].final_distortion <
        report.per_trial[best].final_distortion)
      best = static_cast<int>(t);
  }
  return best;
}

void print_summary(const char* name, const SavingsReport& report) {
  const int b = best_trial(report);
  std::printf("  %s: mean savings %.2f%% over %zu trials"
              " (best final distortion %.6g, trial %d)\n",
              name, report.mean_savings_pct, report.per_trial.size(),
              report.per_trial[b].final_distortion, b);
}

void emit_results(const ExperimentConfig& cfg, const ExperimentResult& res,
                  const std::optional<std::string>& out_dir) {
  if (cfg.algorithm != Algorithm::Ttl) print_summary("otl", res.otl_savings);
  if (cfg.algorithm != Algorithm::Otl) print_summary("ttl", res.ttl_savings);
  if (!out_dir) return;

  const fs::path dir(*out_dir);
  fs::create_directories(dir);
  save_json(to_json(cfg), dir / "config.json");
  if (cfg.algorithm != Algorithm::Ttl) {
    save_json(to_json(res.otl_savings), dir / "savings_otl.json");
    const int b = best_trial(res.otl_savings);
    save_json(to_json(SolutionDocument{cfg, res.otl_solutions[b]}),
              dir / "best_otl.json");
  }
  if (cfg.algorithm != Algorithm::Otl) {
    save_json(to_json(res.ttl_savings), dir / "savings_ttl.json");
    const int b = best_trial(res.ttl_savings);
    save_json(to_json(SolutionDocument{cfg, res.ttl_solutions[b]}),
              dir / "best_ttl.json");
  }
  std::printf("  wrote results to %s\n", dir.string().c_str());
}

Algorithm algorithm_from_flag(const std::string& name) {
  if (name == "otl") return Algorithm::Otl;
  if (name == "ttl") return Algorithm::Ttl;
  if (name == "both") return Algorithm::Both;
  throw std::invalid_argument("--algorithm must be otl, ttl or both");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-optimal AP/BS deployment over a sensing region"};
  app.require_subcommand(1);

  // optimize
  auto* opt_cmd = app.add_subcommand(
      "optimize", "run the random-restart experiment from a config file");
  std::string opt_config;
  std::string opt_algorithm;
  std::optional<std::string> opt_out;
  opt_cmd->add_option("--config", opt_config, "experiment config JSON")
      ->required();
  opt_cmd->add_option("--algorithm", opt_algorithm,
                      "override the config's algorithm (otl|ttl|both)");
  opt_cmd->add_option("--out", opt_out, "directory for result files");

  // analytic
  auto* analytic_cmd =
      app.add_subcommand("analytic", "closed-form solvers (prints JSON)");
  analytic_cmd->require_subcommand(1);
  int an_n = 1, an_m = 1;
  double an_beta = 1.0;
  std::string an_interval = "0,1";
  auto* theorem1_cmd = analytic_cmd->add_subcommand(
      "theorem1", "optimal 1D uniform deployment for N APs and M BSs");
  theorem1_cmd->add_option("--n", an_n, "AP count")->required();
  theorem1_cmd->add_option("--m", an_m, "BS count")->required();
  theorem1_cmd->add_option("--beta", an_beta, "AP-power weight");
  theorem1_cmd->add_option("--interval", an_interval, "region as s,t");
  auto* prop1_cmd = analytic_cmd->add_subcommand(
      "prop1", "optimal 1D uniform deployment with a single BS");
  prop1_cmd->add_option("--n", an_n, "AP count")->required();
  prop1_cmd->add_option("--beta", an_beta, "AP-power weight");
  prop1_cmd->add_option("--interval", an_interval, "region as s,t");
  auto* lemma2_cmd = analytic_cmd->add_subcommand(
      "lemma2", "optimal cluster-size allocation of N APs over M BSs");
  lemma2_cmd->add_option("--n", an_n, "AP count")->required();
  lemma2_cmd->add_option("--m", an_m, "BS count")->required();
  lemma2_cmd->add_option("--beta", an_beta, "AP-power weight");

  // reproduce
  auto* repro_cmd = app.add_subcommand(
      "reproduce", "rerun the built-in wsn1/wsn2 experiments");
  std::string repro_name;
  int repro_trials = 50;
  std::uint64_t repro_seed = 1;
  std::string repro_algorithm = "both";
  std::optional<std::string> repro_out;
  repro_cmd->add_option("name", repro_name, "wsn1 or wsn2")->required();
  repro_cmd->add_option("--trials", repro_trials, "number of random inits");
  repro_cmd->add_option("--seed", repro_seed, "base RNG seed");
  repro_cmd->add_option("--algorithm", repro_algorithm, "otl|ttl|both");
  repro_cmd->add_option("--out", repro_out, "directory for result files");

  // export
  auto* export_cmd = app.add_subcommand(
      "export", "convert a saved solution document to other formats");
  std::string export_in, export_format = "json";
  std::string export_out = ".";
  export_cmd->add_option("--in", export_in, "solution document JSON")
      ->required();
  export_cmd->add_option("--format", export_format, "json|csv|plotdata");
  export_cmd->add_option("--out", export_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt_cmd->parsed()) {
      ExperimentConfig cfg = config_from_json(load_json(opt_config));
      if (!opt_algorithm.empty())
        cfg.algorithm = algorithm_from_flag(opt_algorithm);
      std::printf("optimize: N=%d M=%d beta=%g trials=%d resolution=%d\n",
                  cfg.n_aps, cfg.n_bss, cfg.beta, cfg.trials,
                  cfg.effective_resolution());
      emit_results(cfg, run_experiment(cfg), opt_out);
    } else if (theorem1_cmd->parsed()) {
      const auto [s, t] = parse_interval(an_interval);
      std::cout << to_json(optimal_uniform_1d(s, t, an_n, an_m, an_beta))
                       .dump(2)
                << '\n';
    } else if (prop1_cmd->parsed()) {
      const auto [s, t] = parse_interval(an_interval);
      std::cout << to_json(optimal_uniform_1d(s, t, an_n, 1, an_beta)).dump(2)
                << '\n';
    } else if (lemma2_cmd->parsed()) {
      std::cout << to_json(optimal_allocation(an_n, an_m, an_beta)).dump(2)
                << '\n';
    } else if (repro_cmd->parsed()) {
      ExperimentConfig cfg;
      if (repro_name == "wsn1") {
        cfg = wsn1_config();
      } else if (repro_name == "wsn2") {
        cfg = wsn2_config();
      } else {
        throw std::invalid_argument("reproduce expects wsn1 or wsn2");
      }
      cfg.trials = repro_trials;
      cfg.seed = repro_seed;
      cfg.algorithm = algorithm_from_flag(repro_algorithm);
      std::printf("%s: N=%d M=%d beta=%g trials=%d resolution=%d seed=%llu\n",
                  repro_name.c_str(), cfg.n_aps, cfg.n_bss, cfg.beta,
                  cfg.trials, cfg.effective_resolution(),
                  static_cast<unsigned long long>(cfg.seed));
      emit_results(cfg, run_experiment(cfg), repro_out);
    } else if (export_cmd->parsed()) {
      const SolutionDocument doc =
          solution_document_from_json(load_json(export_in));
      const fs::path dir(export_out);
      fs::create_directories(dir);
      if (export_format == "json") {
        save_json(to_json(doc), dir / "solution.json");
      } else if (export_format == "csv") {
        const Grid grid = build_grid(doc.config.region, doc.config.density,
                                     doc.config.effective_resolution());
        write_assignment_csv(grid, doc.solution.partition,
                             doc.solution.deployment.index_map,
                             dir / "assignment.csv");
        write_trace_csv(doc.solution, dir / "trace.csv");
      } else if (export_format == "plotdata") {
        write_plotdata(doc, dir);
      } else {
        throw std::invalid_argument("--format must be json, csv or plotdata");
      }
      std::printf("wrote %s export to %s\n", export_format.c_str(),
                  dir.string().c_str());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ZeroMassError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
