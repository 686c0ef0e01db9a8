// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tiered/analytic.hpp"
#include "tiered/experiment.hpp"
#include "tiered/lloyd.hpp"

using namespace tiered;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- criterion 1: closed-form single-BS deployment is exact and instant ---
Check criterion1() {
  Check c;
  const auto t0 = Clock::now();
  const auto sol = optimal_uniform_1d(-0.5, 0.5, 4, 1, 1.0);
  const double elapsed = ms_since(t0);

  c.expect(std::abs(sol.bss[0]) <= 1e-12, "BS not at 0");
  const double expected_aps[] = {-3.0 / 16, -1.0 / 16, 1.0 / 16, 3.0 / 16};
  for (int n = 0; n < 4; ++n) {
    c.expect(std::abs(sol.aps[n] - expected_aps[n]) <=
                 1e-12 * std::abs(expected_aps[n]),
             "AP " + std::to_string(n) + " off: " + num(sol.aps[n]));
  }
  const double target = 17.0 / 384.0;
  c.expect(std::abs(sol.distortion - target) <= 1e-12 * target,
           "distortion " + num(sol.distortion));
  c.expect(elapsed < 1.0, "took " + num(elapsed) + " ms");
  return c;
}

// --- criterion 2: allocation matches brute force; closed distortion
//     matches an independent geometric evaluation ---
Check criterion2() {
  Check c;
  const auto t0 = Clock::now();
  for (double beta : {0.25, 1.0, 4.0}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = m; n <= 12; ++n) {
        const auto closed = optimal_allocation(n, m, beta);
        const auto brute = allocation_bruteforce(n, m, beta);
        c.expect(closed.sizes == brute.sizes,
                 "sizes differ at N=" + std::to_string(n) +
                     " M=" + std::to_string(m));
        c.expect(std::abs(closed.value - brute.value) <= 1e-12,
                 "allocation value differs at N=" + std::to_string(n) +
                     " M=" + std::to_string(m));

        const auto sol = optimal_uniform_1d(0, 1, n, m, beta);
        c.expect(std::abs(sol.distortion_from_geometry(beta) -
                          sol.distortion) <= 1e-12,
                 "distortion routes differ at N=" + std::to_string(n) +
                     " M=" + std::to_string(m) + " beta=" + num(beta));
      }
    }
  }
  c.expect(ms_since(t0) < 1000.0, "took too long");
  return c;
}

// --- criterion 3: Lloyd reaches the uniform quantizer optimum ---
Check criterion3() {
  Check c;
  const auto t0 = Clock::now();
  const Grid g =
      build_grid(Region::interval(0, 1), DensitySpec::uniform(), 4096);
  LloydConfig cfg;
  cfg.max_iterations = 1000;
  cfg.rel_tolerance = 1e-13;
  for (int n = 1; n <= 8; ++n) {
    Rng rng(1000 + n);
    std::vector<Vec2> init(n);
    for (int i = 0; i < n; ++i) {
      const double x = (2.0 * i + 1.0) / (2.0 * n);
      init[i] = {x + 0.2 / n * rng.uniform(-1, 1), 0.0};
    }
    const auto res = regular_lloyd(g, n, init, cfg);
    const double target = 1.0 / (12.0 * n * n);
    c.expect(std::abs(res.trace.back() - target) <= 0.005 * target,
             "N=" + std::to_string(n) + " reached " + num(res.trace.back()) +
                 " vs " + num(target));
  }
  c.expect(ms_since(t0) < 5000.0, "took too long");
  return c;
}

// --- criterion 4: TTL restarts reach the closed-form optimum within 1% ---
Check criterion4() {
  Check c;
  const auto t0 = Clock::now();
  const Grid g =
      build_grid(Region::interval(0, 1), DensitySpec::uniform(), 4096);
  struct Case {
    int n, m;
    double beta;
  };
  for (const Case cs : {Case{4, 1, 1.0}, Case{4, 2, 1.0}, Case{5, 2, 1.0},
                        Case{6, 3, 0.5}}) {
    const double target = optimal_uniform_1d(0, 1, cs.n, cs.m, cs.beta)
                              .distortion;
    LloydConfig cfg;
    cfg.max_iterations = 100;
    cfg.rel_tolerance = 1e-10;
    double best = 1e300;
    for (int trial = 0; trial < 50; ++trial) {
      auto [p, q] = random_deployment(
          g.region(), cs.n, cs.m, mix_seed(2024, trial * 10 + cs.n));
      const auto sol = ttl(g, cs.n, cs.m, cs.beta, p, q, cfg);
      best = std::min(best, sol.report.total);
    }
    c.expect(std::abs(best - target) <= 0.01 * target,
             "N=" + std::to_string(cs.n) + " M=" + std::to_string(cs.m) +
                 ": best " + num(best) + " vs " + num(target));
  }
  c.expect(ms_since(t0) < 60000.0, "took too long");
  return c;
}

// --- criterion 5: per-step monotonicity and stationarity on random
//     configurations ---
Check criterion5() {
  Check c;
  const auto t0 = Clock::now();
  const Region region = Region::rect(0, 10, 0, 10);
  for (int case_i = 0; case_i < 100; ++case_i) {
    Rng rng(mix_seed(777, case_i));
    std::vector<GaussianComponent> comps;
    const int n_comps = 1 + static_cast<int>(rng.uniform() * 5);
    for (int i = 0; i < n_comps; ++i) {
      comps.push_back({rng.uniform(0.5, 6.0),
                       {rng.uniform(0, 10), rng.uniform(0, 10)},
                       rng.uniform(0.05, 2.0)});
    }
    const Grid g =
        build_grid(region, DensitySpec::gaussian_mixture(comps), 64);
    const int n = 1 + static_cast<int>(rng.uniform() * 25);
    const int m = 1 + static_cast<int>(rng.uniform() * std::min(n, 5));
    const double beta = rng.uniform(0.0, 4.0);
    auto [init_p, init_q] =
        random_deployment(region, n, m, mix_seed(778, case_i));

    TtlSweep sweep(g, init_p, init_q, beta);
    double prev = sweep.total();
    const double eps = 1e-9 * prev;
    const std::string tag = " (case " + std::to_string(case_i) + ")";
    double sweep_prev = prev;
    for (int it = 0; it < 400; ++it) {
      sweep.move_aps();
      double cur = sweep.total();
      c.expect(cur <= prev + eps, "AP move increased cost" + tag);
      prev = cur;
      sweep.repartition();
      cur = sweep.total();
      c.expect(cur <= prev + eps, "repartition increased cost" + tag);
      prev = cur;
      sweep.move_bss();
      cur = sweep.total();
      c.expect(cur <= prev + eps, "BS move increased cost" + tag);
      prev = cur;
      sweep.reassign();
      cur = sweep.total();
      c.expect(cur <= prev + eps, "reassignment increased cost" + tag);
      prev = cur;
      if (sweep_prev > 0.0 && (sweep_prev - cur) < 1e-12 * sweep_prev) break;
      sweep_prev = cur;
    }
    const Residuals res = sweep.residuals();
    c.expect(res.ap <= 2.0 * g.cell_width(),
             "AP residual " + num(res.ap) + tag);
    c.expect(res.bs <= 2.0 * g.cell_width(),
             "BS residual " + num(res.bs) + tag);

    // OTL inner Lloyd runs are individually monotone
    LloydConfig cfg;
    cfg.max_iterations = 60;
    const auto ap_run = regular_lloyd(g, n, init_p, cfg);
    const auto bs_run = regular_lloyd(g, m, init_q, cfg);
    for (const auto* trace : {&ap_run.trace, &bs_run.trace}) {
      for (std::size_t i = 1; i < trace->size(); ++i) {
        c.expect((*trace)[i] <=
                     (*trace)[i - 1] + 1e-9 * trace->front(),
                 "inner Lloyd step increased cost" + tag);
      }
    }
  }
  c.expect(ms_since(t0) < 300000.0, "took too long");
  return c;
}

// --- criterion 6: statistical reproduction of the desk-scale experiments ---
Check criterion6() {
  Check c;
  const auto t0 = Clock::now();
  struct Target {
    const char* name;
    ExperimentConfig cfg;
    double otl_pct, ttl_pct;
  };
  std::vector<Target> targets;
  targets.push_back({"wsn1", wsn1_config(), 53.61, 53.71});
  targets.push_back({"wsn2", wsn2_config(), 79.29, 79.16});
  for (auto& t : targets) {
    const ExperimentResult res = run_experiment(t.cfg);
    const double otl_mean = res.otl_savings.mean_savings_pct;
    const double ttl_mean = res.ttl_savings.mean_savings_pct;
    std::printf("       %s: otl mean %.2f%% (target %.2f±6), ttl mean %.2f%% "
                "(target %.2f±6)\n",
                t.name, otl_mean, t.otl_pct, ttl_mean, t.ttl_pct);
    c.expect(std::abs(otl_mean - t.otl_pct) <= 6.0,
             std::string(t.name) + " otl mean " + num(otl_mean));
    c.expect(std::abs(ttl_mean - t.ttl_pct) <= 6.0,
             std::string(t.name) + " ttl mean " + num(ttl_mean));
  }
  c.expect(ms_since(t0) < 900000.0, "took too long");
  return c;
}

// --- criterion 7: degenerate inputs ---
Check criterion7() {
  Check c;

  // beta = 0 energy partition equals the nearest-AP partition exactly
  const Grid g =
      build_grid(Region::rect(0, 10, 0, 10), DensitySpec::uniform(), 128);
  auto [aps, bss] = random_deployment(g.region(), 12, 3, 2718);
  const auto t = best_index_map(aps, bss);
  const auto part = energy_voronoi(g, aps, bss, t, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    int nearest = 0;
    for (std::size_t n = 1; n < aps.size(); ++n) {
      if (dist2(aps[n], g.point(k)) < dist2(aps[nearest], g.point(k)))
        nearest = static_cast<int>(n);
    }
    if (part.assign[k] != nearest) {
      c.expect(false, "beta=0 partition disagrees at cell " +
                          std::to_string(k));
      break;
    }
  }

  // single BS: the index map is identically the first BS
  const auto ones = best_index_map(aps, {Vec2{5, 5}});
  for (int v : ones) c.expect(v == 0, "single-BS index map not constant");

  // an AP with an empty cell stays put across a full sweep
  std::vector<Vec2> dup_aps = {{2, 2}, {2, 2}, {8, 8}};
  TtlSweep sweep(g, dup_aps, {Vec2{5, 5}}, 1.0);
  c.expect(sweep.partition().volumes[1] == 0.0,
           "duplicate AP unexpectedly owns cells");
  sweep.move_aps();
  sweep.repartition();
  sweep.move_bss();
  sweep.reassign();
  c.expect(sweep.deployment().aps[1].x == 2.0 &&
               sweep.deployment().aps[1].y == 2.0,
           "empty-cell AP moved");

  // zero density is rejected up front
  ExperimentConfig cfg;
  cfg.region = Region::interval(0, 1);
  cfg.density = DensitySpec::grid_table(std::vector<double>(4, 0.0));
  cfg.n_aps = 1;
  cfg.n_bss = 1;
  cfg.trials = 1;
  cfg.resolution = 4;
  bool threw = false;
  try {
    run_experiment(cfg);
  } catch (const ZeroMassError&) {
    threw = true;
  }
  c.expect(threw, "zero-mass config not rejected");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 closed-form single-BS optimum exact to 1e-12, <1ms", criterion1},
      {"2 allocation vs brute force and dual distortion routes", criterion2},
      {"3 Lloyd reaches uniform quantizer optima within 0.5%", criterion3},
      {"4 TTL restarts reach closed-form optima within 1%", criterion4},
      {"5 per-step monotonicity and stationarity on random configs",
       criterion5},
      {"6 statistical reproduction of wsn1/wsn2 savings", criterion6},
      {"7 degenerate-input handling", criterion7},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = criterion.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = ms_since(t0);
    if (c.ok) {
      std::printf("PASS  criterion %s  [%.0f ms]\n", criterion.label,
                  elapsed);
    } else {
      std::printf("FAIL  criterion %s  [%.0f ms]  %s\n", criterion.label,
                  elapsed, c.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
