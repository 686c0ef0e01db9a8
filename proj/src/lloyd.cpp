#include "tiered/lloyd.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiered {

namespace {

using detail::Kahan;

void require_inside(const Region& region, const std::vector<Vec2>& points,
                    const char* what) {
  for (Vec2 p : points) {
    if (!region.contains(p))
      throw std::invalid_argument(std::string(what) +
                                  " position outside the region");
  }
}

void assign_nearest(const Grid& grid, const std::vector<Vec2>& points,
                    std::vector<int>& assign) {
  assign.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec2 w = grid.point(k);
    int best = 0;
    double best_d = dist2(points[0], w);
    for (std::size_t n = 1; n < points.size(); ++n) {
      const double d = dist2(points[n], w);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(n);
      }
    }
    assign[k] = best;
  }
}

void compute_moments(const Grid& grid, std::size_t n_points,
                     const std::vector<int>& assign,
                     std::vector<double>& volumes,
                     std::vector<Vec2>& centroids) {
  std::vector<Kahan> vol(n_points), mx(n_points), my(n_points);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int n = assign[k];
    const double w = grid.weight(k);
    vol[n].add(w);
    mx[n].add(w * grid.point(k).x);
    my[n].add(w * grid.point(k).y);
  }
  volumes.assign(n_points, 0.0);
  centroids.assign(n_points, Vec2{});
  for (std::size_t n = 0; n < n_points; ++n) {
    volumes[n] = vol[n].sum;
    if (volumes[n] > 0.0)
      centroids[n] = {mx[n].sum / volumes[n], my[n].sum / volumes[n]};
  }
}

double quantizer_distortion(const Grid& grid, const std::vector<Vec2>& points,
                            const std::vector<int>& assign) {
  Kahan acc;
  for (std::size_t k = 0; k < grid.size(); ++k)
    acc.add(grid.weight(k) * dist2(points[assign[k]], grid.point(k)));
  return acc.sum;
}

bool converged(double prev, double cur, double rel_tolerance) {
  if (!(prev > 0.0)) return true;
  return (prev - cur) < rel_tolerance * prev;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the stream-offset seed
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::pair<std::vector<Vec2>, std::vector<Vec2>> random_deployment(
    const Region& region, int n_aps, int n_bss, std::uint64_t seed) {
  if (n_aps < 0 || n_bss < 0)
    throw std::invalid_argument("negative node count");
  Rng rng(seed);
  auto draw = [&](int count) {
    std::vector<Vec2> pts(count);
    for (auto& p : pts) {
      p.x = rng.uniform(region.x0(), region.x1());
      p.y = region.kind() == Region::Kind::Interval
                ? 0.0
                : rng.uniform(region.y0(), region.y1());
    }
    return pts;
  };
  auto aps = draw(n_aps);
  auto bss = draw(n_bss);
  return {std::move(aps), std::move(bss)};
}

RegularLloydResult regular_lloyd(const Grid& grid, int k,
                                 const std::vector<Vec2>& init,
                                 const LloydConfig& config) {
  if (k < 1) throw std::invalid_argument("quantizer level must be >= 1");
  if (!init.empty() && static_cast<int>(init.size()) != k)
    throw std::invalid_argument("init size != k");
  if (config.max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
  require_inside(grid.region(), init, "init point");

  RegularLloydResult res;
  res.points = init.empty()
                   ? random_deployment(grid.region(), k, 0, config.seed).first
                   : init;
  auto& part = res.partition;
  assign_nearest(grid, res.points, part.assign);
  compute_moments(grid, static_cast<std::size_t>(k), part.assign, part.volumes,
                  part.centroids);
  res.trace.push_back(quantizer_distortion(grid, res.points, part.assign));

  for (int it = 1; it <= config.max_iterations; ++it) {
    for (int n = 0; n < k; ++n) {
      if (part.volumes[n] > 0.0) res.points[n] = part.centroids[n];
    }
    assign_nearest(grid, res.points, part.assign);
    compute_moments(grid, static_cast<std::size_t>(k), part.assign, part.volumes,
                    part.centroids);
    res.trace.push_back(quantizer_distortion(grid, res.points, part.assign));
    res.iterations = it;
    if (converged(res.trace[it - 1], res.trace[it], config.rel_tolerance))
      break;
  }
  return res;
}

TtlSweep::TtlSweep(const Grid& grid, std::vector<Vec2> aps,
                   std::vector<Vec2> bss, double beta)
    : grid_(&grid), beta_(beta) {
  if (aps.empty() || bss.empty())
    throw std::invalid_argument("need at least one AP and one BS");
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  require_inside(grid.region(), aps, "AP");
  require_inside(grid.region(), bss, "BS");
  dep_.aps = std::move(aps);
  dep_.bss = std::move(bss);
  dep_.index_map = best_index_map(dep_.aps, dep_.bss);
  part_ = energy_voronoi(grid, dep_.aps, dep_.bss, dep_.index_map, beta_);
}

void TtlSweep::move_aps() {
  for (std::size_t n = 0; n < dep_.aps.size(); ++n) {
    if (!(part_.volumes[n] > 0.0)) continue;  // empty cell: stay put
    dep_.aps[n] = (1.0 / (1.0 + beta_)) *
                  (part_.centroids[n] + beta_ * dep_.bss[dep_.index_map[n]]);
  }
}

void TtlSweep::repartition() {
  part_ = energy_voronoi(*grid_, dep_.aps, dep_.bss, dep_.index_map, beta_);
}

void TtlSweep::move_bss() {
  for (std::size_t m = 0; m < dep_.bss.size(); ++m) {
    double vol = 0.0;
    Vec2 num{};
    for (std::size_t n = 0; n < dep_.aps.size(); ++n) {
      if (dep_.index_map[n] != static_cast<int>(m)) continue;
      vol += part_.volumes[n];
      num = num + part_.volumes[n] * dep_.aps[n];
    }
    if (vol > 0.0) dep_.bss[m] = num / vol;  // empty cluster: stay put
  }
}

void TtlSweep::reassign() {
  dep_.index_map = best_index_map(dep_.aps, dep_.bss);
}

DistortionReport TtlSweep::report() const {
  return distortion(*grid_, dep_, part_, beta_);
}

double TtlSweep::total() const { return report().total; }

Residuals TtlSweep::residuals() const {
  return fixed_point_residual(*grid_, dep_, part_, beta_);
}

namespace {

// resolve empty inits by drawing from the config seed; nonempty inits
// must match the requested counts
std::pair<std::vector<Vec2>, std::vector<Vec2>> resolve_inits(
    const Grid& grid, int n_aps, int n_bss,
    const std::vector<Vec2>& init_aps, const std::vector<Vec2>& init_bss,
    const LloydConfig& config) {
  if (!init_aps.empty() && static_cast<int>(init_aps.size()) != n_aps)
    throw std::invalid_argument("init AP count != N");
  if (!init_bss.empty() && static_cast<int>(init_bss.size()) != n_bss)
    throw std::invalid_argument("init BS count != M");
  const bool need_p = init_aps.empty();
  const bool need_q = init_bss.empty();
  std::pair<std::vector<Vec2>, std::vector<Vec2>> drawn;
  if (need_p || need_q)
    drawn = random_deployment(grid.region(), need_p ? n_aps : 0,
                              need_q ? n_bss : 0, config.seed);
  return {need_p ? std::move(drawn.first) : init_aps,
          need_q ? std::move(drawn.second) : init_bss};
}

}  // namespace

Solution ttl(const Grid& grid, int n_aps, int n_bss, double beta,
             const std::vector<Vec2>& init_aps,
             const std::vector<Vec2>& init_bss, const LloydConfig& config) {
  if (n_aps < 1 || n_bss < 1)
    throw std::invalid_argument("need N >= 1 and M >= 1");
  if (config.max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
  auto [start_p, start_q] =
      resolve_inits(grid, n_aps, n_bss, init_aps, init_bss, config);

  TtlSweep sweep(grid, std::move(start_p), std::move(start_q), beta);
  Solution sol;
  DistortionReport rep = sweep.report();
  sol.trace.push_back({rep.total, rep.sensor_term, rep.ap_term});

  for (int it = 1; it <= config.max_iterations; ++it) {
    sweep.move_aps();
    sweep.repartition();
    sweep.move_bss();
    sweep.reassign();
    rep = sweep.report();
    sol.trace.push_back({rep.total, rep.sensor_term, rep.ap_term});
    sol.iterations = it;
    if (converged(sol.trace[it - 1].total, rep.total, config.rel_tolerance))
      break;
  }

  sol.deployment = sweep.deployment();
  sol.partition = sweep.partition();
  sol.report = rep;
  return sol;
}

Solution otl(const Grid& grid, int n_aps, int n_bss, double beta,
             const std::vector<Vec2>& init_aps,
             const std::vector<Vec2>& init_bss, const LloydConfig& config) {
  if (n_bss < 1 || n_aps < n_bss)
    throw std::invalid_argument("need N >= M >= 1");
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  auto [start_p, start_q] =
      resolve_inits(grid, n_aps, n_bss, init_aps, init_bss, config);

  const auto bs_run = regular_lloyd(grid, n_bss, start_q, config);
  const auto ap_run = regular_lloyd(grid, n_aps, start_p, config);

  Solution sol;
  sol.deployment.bss = bs_run.points;
  sol.deployment.index_map = best_index_map(ap_run.points, bs_run.points);
  sol.deployment.aps.resize(ap_run.points.size());
  for (std::size_t n = 0; n < ap_run.points.size(); ++n) {
    sol.deployment.aps[n] =
        (1.0 / (1.0 + beta)) *
        (ap_run.points[n] +
         beta * sol.deployment.bss[sol.deployment.index_map[n]]);
  }
  sol.partition = ap_run.partition;
  sol.report = distortion(grid, sol.deployment, sol.partition, beta);
  for (double d : ap_run.trace) sol.trace.push_back({d, d, 0.0});
  for (double d : bs_run.trace) sol.bs_trace.push_back({d, d, 0.0});
  // iterations tracks the AP-stage trace so trace length == iterations + 1
  sol.iterations = ap_run.iterations;
  return sol;
}

}  // namespace tiered
