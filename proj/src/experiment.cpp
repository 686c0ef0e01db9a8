#include "tiered/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tiered {

int ExperimentConfig::effective_resolution() const {
  if (resolution > 0) return resolution;
  return region.dimension() == 1 ? 4096 : 256;
}

void ExperimentConfig::validate() const {
  if (n_aps < 1) throw std::invalid_argument("N must be >= 1");
  if (n_bss < 1) throw std::invalid_argument("M must be >= 1");
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (max_iterations < 1)
    throw std::invalid_argument("maxIterations must be >= 1");
  if (resolution < 0)
    throw std::invalid_argument("resolution must be positive (0 = default)");
}

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  int cap = static_cast<int>(hw);
  if (const char* env = std::getenv("TIERED_DEPLOY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

namespace {

SavingsReport summarize(const std::vector<double>& initial,
                        const std::vector<Solution>& solutions) {
  SavingsReport report;
  double sum = 0.0;
  for (std::size_t t = 0; t < solutions.size(); ++t) {
    TrialOutcome out;
    out.initial_distortion = initial[t];
    out.final_distortion = solutions[t].report.total;
    out.savings_pct =
        initial[t] > 0.0
            ? 100.0 * (1.0 - out.final_distortion / out.initial_distortion)
            : 0.0;
    sum += out.savings_pct;
    report.per_trial.push_back(out);
  }
  report.mean_savings_pct = sum / static_cast<double>(solutions.size());
  return report;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Grid grid =
      build_grid(config.region, config.density, config.effective_resolution());

  const bool do_otl = config.algorithm != Algorithm::Ttl;
  const bool do_ttl = config.algorithm != Algorithm::Otl;
  const int trials = config.trials;

  LloydConfig lloyd_cfg;
  lloyd_cfg.max_iterations = config.max_iterations;

  ExperimentResult result;
  std::vector<double> baselines(trials, 0.0);
  if (do_otl) result.otl_solutions.resize(trials);
  if (do_ttl) result.ttl_solutions.resize(trials);

  auto run_trial = [&](int t) {
    const std::uint64_t trial_seed = mix_seed(config.seed, t);
    auto [init_p, init_q] =
        random_deployment(config.region, config.n_aps, config.n_bss,
                          trial_seed);
    const auto index_map = best_index_map(init_p, init_q);
    const auto part =
        energy_voronoi(grid, init_p, init_q, index_map, config.beta);
    baselines[t] =
        distortion(grid, {init_p, init_q, index_map}, part, config.beta)
            .total;
    if (do_otl)
      result.otl_solutions[t] = otl(grid, config.n_aps, config.n_bss,
                                    config.beta, init_p, init_q,
                                    lloyd_cfg);
    if (do_ttl)
      result.ttl_solutions[t] = ttl(grid, config.n_aps, config.n_bss,
                                    config.beta, init_p, init_q,
                                    lloyd_cfg);
  };

  const int workers = std::min(thread_cap(), trials);
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back([&] {
        try {
          for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
            run_trial(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  if (do_otl) result.otl_savings = summarize(baselines, result.otl_solutions);
  if (do_ttl) result.ttl_savings = summarize(baselines, result.ttl_solutions);
  return result;
}

namespace {

ExperimentConfig preset_base() {
  ExperimentConfig cfg;
  cfg.region = Region::rect(0, 10, 0, 10);
  std::vector<GaussianComponent> comps;
  for (Vec2 c : {Vec2{8, 1}, Vec2{4, 9}, Vec2{7.6, 7.6}, Vec2{9.4, 5},
                 Vec2{2, 2}}) {
    comps.push_back({5.0, c, 0.5});
  }
  cfg.density = DensitySpec::gaussian_mixture(std::move(comps));
  cfg.n_aps = 20;
  cfg.beta = 1.0;
  cfg.trials = 50;
  cfg.max_iterations = 100;
  cfg.resolution = 0;
  cfg.seed = 1;
  cfg.algorithm = Algorithm::Both;
  return cfg;
}

}  // namespace

ExperimentConfig wsn1_config() {
  ExperimentConfig cfg = preset_base();
  cfg.n_bss = 1;
  return cfg;
}

ExperimentConfig wsn2_config() {
  ExperimentConfig cfg = preset_base();
  cfg.n_bss = 4;
  return cfg;
}

}  // namespace tiered
