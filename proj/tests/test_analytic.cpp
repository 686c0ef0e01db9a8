#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tiered/analytic.hpp"
#include "tiered/lloyd.hpp"

using namespace tiered;

TEST_CASE("even allocation splits evenly") {
  for (double beta : {0.25, 1.0, 4.0}) {
    auto a = optimal_allocation(4, 2, beta);
    CHECK(a.sizes == std::vector<int>{2, 2});
    CHECK(a.value == doctest::Approx(beta / 4.0 + 1.0 / 16.0).epsilon(1e-14));
  }
}

TEST_CASE("uneven allocation uses ceil and floor sizes") {
  auto a = optimal_allocation(5, 2, 1.0);
  CHECK(a.sizes == std::vector<int>{3, 2});
  const double expect =
      std::pow(3.0 / std::sqrt(10.0) + 2.0 / std::sqrt(5.0), -2.0);
  CHECK(a.value == doctest::Approx(expect).epsilon(1e-14));
  CHECK(a.value == doctest::Approx(0.294370).epsilon(1e-5));
}

TEST_CASE("one AP per BS is the symmetric point") {
  auto a = optimal_allocation(3, 3, 2.0);
  CHECK(a.sizes == std::vector<int>{1, 1, 1});
  CHECK(a.value == doctest::Approx(3.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("brute force enumeration agrees with the closed allocation") {
  for (double beta : {0.1, 1.0, 10.0}) {
    for (int m = 1; m <= 5; ++m) {
      for (int n = m; n <= 20; ++n) {
        auto closed = optimal_allocation(n, m, beta);
        auto brute = allocation_bruteforce(n, m, beta);
        CHECK(closed.sizes == brute.sizes);  // both sorted descending
        CHECK(closed.value ==
              doctest::Approx(brute.value).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("brute force spot checks") {
  auto a = allocation_bruteforce(7, 3, 0.5);
  CHECK(a.sizes == std::vector<int>{3, 2, 2});
  auto b = allocation_bruteforce(9, 1, 0.25);
  CHECK(b.sizes == std::vector<int>{9});
  CHECK(b.value == doctest::Approx(0.25 + 1.0 / 81.0).epsilon(1e-14));
  CHECK_THROWS_AS(allocation_bruteforce(31, 2, 1.0), TooLargeError);
  CHECK_THROWS_AS(optimal_allocation(2, 3, 1.0), std::invalid_argument);
}

TEST_CASE("closed 1d optimum for four APs and two BSs") {
  auto sol = optimal_uniform_1d(0, 1, 4, 2, 1.0);
  CHECK(sol.distortion == doctest::Approx(5.0 / 384.0).epsilon(1e-14));
  REQUIRE(sol.cluster_bounds.size() == 3);
  CHECK(sol.cluster_bounds[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sol.bss[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sol.bss[1] == doctest::Approx(0.75).epsilon(1e-14));
  for (std::size_t n = 0; n + 1 < sol.cell_bounds.size(); ++n)
    CHECK(sol.cell_bounds[n + 1] - sol.cell_bounds[n] ==
          doctest::Approx(0.25).epsilon(1e-13));
  CHECK(sol.index_map == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("closed 1d optimum with uneven clusters") {
  auto sol = optimal_uniform_1d(0, 1, 5, 2, 1.0);
  const double la = 3.0 / std::sqrt(10.0);
  const double lb = 2.0 / std::sqrt(5.0);
  CHECK(sol.cluster_bounds[1] - sol.cluster_bounds[0] ==
        doctest::Approx(la / (la + lb)).epsilon(1e-13));
  CHECK(sol.cluster_bounds[1] == doctest::Approx(0.51472).epsilon(1e-4));
  CHECK(sol.distortion == doctest::Approx(0.0122654).epsilon(1e-4));
  CHECK(sol.distortion ==
        doctest::Approx(std::pow(la + lb, -2.0) / 24.0).epsilon(1e-14));
}

TEST_CASE("one AP per BS puts APs on cell centroids") {
  auto sol = optimal_uniform_1d(0, 1, 3, 3, 5.0);
  CHECK(sol.distortion == doctest::Approx(1.0 / 108.0).epsilon(1e-14));
  for (int n = 0; n < 3; ++n) {
    CHECK(sol.aps[n] == doctest::Approx(sol.bss[n]).epsilon(1e-14));
    CHECK(sol.aps[n] ==
          doctest::Approx((2.0 * n + 1.0) / 6.0).epsilon(1e-13));
  }
}

TEST_CASE("single cluster matches the one-BS closed form") {
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 8; ++n) {
      auto sol = optimal_uniform_1d(2, 5, n, 1, beta);
      const double mu = 3.0;
      const double expect = mu * mu / (12.0 * (1.0 + beta) * n * n) +
                            beta * mu * mu / (12.0 * (1.0 + beta));
      CHECK(sol.distortion == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("the textbook four-AP single-BS instance is exact") {
  auto sol = optimal_uniform_1d(-0.5, 0.5, 4, 1, 1.0);
  CHECK(std::abs(sol.bss[0]) < 1e-15);
  const double expected_aps[] = {-3.0 / 16, -1.0 / 16, 1.0 / 16, 3.0 / 16};
  for (int n = 0; n < 4; ++n)
    CHECK(std::abs(sol.aps[n] - expected_aps[n]) < 1e-15);
  CHECK(sol.distortion ==
        doctest::Approx(17.0 / 384.0).epsilon(1e-14));
  CHECK(sol.distortion_from_geometry(1.0) ==
        doctest::Approx(17.0 / 384.0).epsilon(1e-14));
}

TEST_CASE("geometric re-evaluation reproduces the closed distortion") {
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = m; n <= 10; ++n) {
        auto sol = optimal_uniform_1d(-1, 3, n, m, beta);
        CHECK(sol.distortion_from_geometry(beta) ==
              doctest::Approx(sol.distortion).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("grid re-evaluation reproduces the closed distortion") {
  Grid g = build_grid(Region::interval(0, 1), DensitySpec::uniform(), 4096);
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = m; n <= 10; ++n) {
        auto sol = optimal_uniform_1d(0, 1, n, m, beta);
        Deployment dep = sol.to_deployment();
        PartitionState part =
            energy_voronoi(g, dep.aps, dep.bss, dep.index_map, beta);
        DistortionReport rep = distortion(g, dep, part, beta);
        CHECK(rep.total ==
              doctest::Approx(sol.distortion).epsilon(2e-3));
      }
    }
  }
}

TEST_CASE("closed solution satisfies the stationarity conditions") {
  Grid g = build_grid(Region::interval(0, 1), DensitySpec::uniform(), 4096);
  for (double beta : {0.0, 1.0, 3.0}) {
    auto sol = optimal_uniform_1d(0, 1, 7, 3, beta);
    // analytic check: each AP sits on the shrink point of its cell
    for (std::size_t n = 0; n < sol.aps.size(); ++n) {
      const double c =
          0.5 * (sol.cell_bounds[n] + sol.cell_bounds[n + 1]);
      const double q = sol.bss[sol.index_map[n]];
      CHECK(std::abs(sol.aps[n] - (c + beta * q) / (1.0 + beta)) < 1e-14);
    }
    Deployment dep = sol.to_deployment();
    PartitionState part =
        energy_voronoi(g, dep.aps, dep.bss, dep.index_map, beta);
    Residuals res = fixed_point_residual(g, dep, part, beta);
    CHECK(res.ap <= g.cell_width());
    CHECK(res.bs <= g.cell_width());
  }
}

TEST_CASE("closed distortion is monotone in N and M") {
  for (double beta : {0.25, 1.0, 4.0}) {
    for (int m = 1; m <= 4; ++m) {
      double prev = 1e300;
      for (int n = m; n <= 14; ++n) {
        const double d = optimal_uniform_1d(0, 1, n, m, beta).distortion;
        CHECK(d <= prev + 1e-15);
        prev = d;
      }
    }
    for (int n = 8; n <= 8; ++n) {
      double prev = 1e300;
      for (int m = 1; m <= n; ++m) {
        const double d = optimal_uniform_1d(0, 1, n, m, beta).distortion;
        CHECK(d <= prev + 1e-15);
        prev = d;
      }
    }
  }
}

TEST_CASE("quantizer lower bound formula") {
  CHECK(quantizer_lower_bound(1, 1.0) == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(quantizer_lower_bound(4, 1.0) ==
        doctest::Approx(1.0 / 192).epsilon(1e-15));
  CHECK(quantizer_lower_bound(2, 3.0) == doctest::Approx(0.1875).epsilon(1e-15));
}

TEST_CASE("single-BS shrink solution on a gridded quantizer") {
  Grid g = build_grid(Region::interval(0, 1), DensitySpec::uniform(), 4096);
  LloydConfig cfg;
  auto quant = regular_lloyd(g, 1, {{0.9, 0}}, cfg);
  auto sol = single_bs_optimum(g, quant.points, quant.partition, 2.0);
  CHECK(sol.deployment.aps[0].x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(sol.deployment.bss[0].x == doctest::Approx(0.5).epsilon(1e-9));
  // both integrals are the uniform variance: blend gives 1/12
  CHECK(sol.predicted_distortion ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-5));
}

TEST_CASE("shrink solution reproduces the textbook instance on a grid") {
  Grid g = build_grid(Region::interval(-0.5, 0.5), DensitySpec::uniform(),
                      4096);
  std::vector<Vec2> quant_points;
  for (int n = 1; n <= 4; ++n)
    quant_points.push_back({(2.0 * n - 5.0) / 8.0, 0});
  // nearest-point partition = energy voronoi at beta 0
  PartitionState part =
      energy_voronoi(g, quant_points, {{0, 0}}, {0, 0, 0, 0}, 0.0);
  auto sol = single_bs_optimum(g, quant_points, part, 1.0);
  CHECK(sol.predicted_distortion ==
        doctest::Approx(17.0 / 384.0).epsilon(1e-5));
  for (int n = 0; n < 4; ++n)
    CHECK(sol.deployment.aps[n].x ==
          doctest::Approx((2.0 * (n + 1) - 5.0) / 16.0).epsilon(1e-9));
  // the predicted value matches a direct evaluation of the assembled state
  DistortionReport rep =
      distortion(g, sol.deployment, part, 1.0);
  CHECK(rep.total == doctest::Approx(sol.predicted_distortion).epsilon(1e-9));
}

TEST_CASE("ttl restarts never beat the closed optimum") {
  Grid g = build_grid(Region::interval(0, 1), DensitySpec::uniform(), 1024);
  LloydConfig cfg;
  cfg.max_iterations = 100;
  cfg.rel_tolerance = 1e-10;
  for (int m = 1; m <= 3; ++m) {
    for (int n = m; n <= 6; ++n) {
      const double closed = optimal_uniform_1d(0, 1, n, m, 1.0).distortion;
      for (int trial = 0; trial < 200; ++trial) {
        auto [init_p, init_q] =
            random_deployment(g.region(), n, m, mix_seed(555, trial));
        auto sol = ttl(g, n, m, 1.0, init_p, init_q, cfg);
        CHECK(sol.report.total >= closed * (1.0 - 5e-4));
      }
    }
  }
}
