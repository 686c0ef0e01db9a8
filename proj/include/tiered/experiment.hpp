#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiered/lloyd.hpp"

namespace tiered {

enum class Algorithm { Otl, Ttl, Both };

struct ExperimentConfig {
  Region region = Region::rect(0.0, 10.0, 0.0, 10.0);
  DensitySpec density = DensitySpec::uniform();
  int n_aps = 1;
  int n_bss = 1;
  double beta = 1.0;
  int trials = 50;
  int max_iterations = 100;
  int resolution = 0;  // 0 -> 256 per axis in 2D, 4096 in 1D
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::Both;

  int effective_resolution() const;
  void validate() const;  // throws std::invalid_argument
};

struct TrialOutcome {
  double initial_distortion = 0.0;
  double final_distortion = 0.0;
  double savings_pct = 0.0;  // 100 * (1 - final/initial)
};

struct SavingsReport {
  std::vector<TrialOutcome> per_trial;
  double mean_savings_pct = 0.0;
};

struct ExperimentResult {
  SavingsReport otl_savings;
  SavingsReport ttl_savings;
  std::vector<Solution> otl_solutions;
  std::vector<Solution> ttl_solutions;
};

/// Seeded random-restart experiment: each trial draws a uniform random
/// deployment, scores it with the nearest-BS map and energy-Voronoi
/// partition (the baseline), runs the selected algorithm(s) from that
/// init, and records the percentage of power saved. Trials run in a
/// worker pool (capped by TIERED_DEPLOY_THREADS) but results are ordered
/// and bit-reproducible for a given seed.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Built-in experiment presets: 20 APs on [0,10]^2 with the five-component
/// Gaussian traffic density, beta = 1; wsn1 has 1 BS, wsn2 has 4.
ExperimentConfig wsn1_config();
ExperimentConfig wsn2_config();

/// Worker-pool width: min(hardware, TIERED_DEPLOY_THREADS if set).
int thread_cap();

}  // namespace tiered
