#include "tiered/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tiered/errors.hpp"

namespace tiered {

namespace {

using detail::Kahan;

void check_index_map(std::size_t n_aps, std::size_t n_bss,
                     const std::vector<int>& index_map) {
  if (index_map.size() != n_aps)
    throw std::invalid_argument("index map length != AP count");
  for (int m : index_map) {
    if (m < 0 || static_cast<std::size_t>(m) >= n_bss)
      throw std::invalid_argument("index map entry out of range");
  }
}

}  // namespace

std::vector<int> best_index_map(const std::vector<Vec2>& aps,
                                const std::vector<Vec2>& bss) {
  if (aps.empty() || bss.empty())
    throw std::invalid_argument("need at least one AP and one BS");
  std::vector<int> map(aps.size(), 0);
  for (std::size_t n = 0; n < aps.size(); ++n) {
    double best = dist2(aps[n], bss[0]);
    for (std::size_t m = 1; m < bss.size(); ++m) {
      const double d = dist2(aps[n], bss[m]);
      if (d < best) {
        best = d;
        map[n] = static_cast<int>(m);
      }
    }
  }
  return map;
}

PartitionState energy_voronoi(const Grid& grid, const std::vector<Vec2>& aps,
                              const std::vector<Vec2>& bss,
                              const std::vector<int>& index_map, double beta) {
  if (aps.empty() || bss.empty())
    throw std::invalid_argument("need at least one AP and one BS");
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  check_index_map(aps.size(), bss.size(), index_map);

  const std::size_t n_aps = aps.size();
  std::vector<double> penalty(n_aps);
  for (std::size_t n = 0; n < n_aps; ++n)
    penalty[n] = beta * dist2(aps[n], bss[index_map[n]]);

  PartitionState part;
  part.assign.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec2 w = grid.point(k);
    int best = 0;
    double best_cost = dist2(aps[0], w) + penalty[0];
    for (std::size_t n = 1; n < n_aps; ++n) {
      const double cost = dist2(aps[n], w) + penalty[n];
      if (cost < best_cost) {
        best_cost = cost;
        best = static_cast<int>(n);
      }
    }
    part.assign[k] = best;
  }

  part.volumes.assign(n_aps, 0.0);
  part.centroids.assign(n_aps, Vec2{});
  std::vector<Kahan> vol(n_aps), mx(n_aps), my(n_aps);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int n = part.assign[k];
    const double w = grid.weight(k);
    vol[n].add(w);
    mx[n].add(w * grid.point(k).x);
    my[n].add(w * grid.point(k).y);
  }
  for (std::size_t n = 0; n < n_aps; ++n) {
    part.volumes[n] = vol[n].sum;
    if (part.volumes[n] > 0.0)
      part.centroids[n] = {mx[n].sum / part.volumes[n],
                           my[n].sum / part.volumes[n]};
  }
  return part;
}

DistortionReport distortion(const Grid& grid, const Deployment& deployment,
                            const PartitionState& partition, double beta) {
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  check_index_map(deployment.aps.size(), deployment.bss.size(),
                  deployment.index_map);
  if (partition.assign.size() != grid.size())
    throw InconsistentPartitionError("assignment length != grid size");

  const std::size_t n_aps = deployment.aps.size();
  for (int a : partition.assign) {
    if (a < 0 || static_cast<std::size_t>(a) >= n_aps)
      throw InconsistentPartitionError("assignment entry out of range");
  }

  std::vector<double> penalty(n_aps);
  for (std::size_t n = 0; n < n_aps; ++n)
    penalty[n] =
        beta * dist2(deployment.aps[n], deployment.bss[deployment.index_map[n]]);

  std::vector<Kahan> sensor(n_aps), mass(n_aps);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int n = partition.assign[k];
    const double w = grid.weight(k);
    sensor[n].add(w * dist2(deployment.aps[n], grid.point(k)));
    mass[n].add(w);
  }

  DistortionReport rep;
  rep.per_ap.resize(n_aps);
  rep.per_bs.assign(deployment.bss.size(), 0.0);
  Kahan sensor_total, ap_total;
  for (std::size_t n = 0; n < n_aps; ++n) {
    const double ap_part = mass[n].sum * penalty[n];
    rep.per_ap[n] = sensor[n].sum + ap_part;
    rep.per_bs[deployment.index_map[n]] += rep.per_ap[n];
    sensor_total.add(sensor[n].sum);
    ap_total.add(ap_part);
  }
  rep.sensor_term = sensor_total.sum;
  rep.ap_term = ap_total.sum;
  rep.total = rep.sensor_term + rep.ap_term;
  return rep;
}

Residuals fixed_point_residual(const Grid& grid, const Deployment& deployment,
                               const PartitionState& partition, double beta) {
  if (partition.assign.size() != grid.size())
    throw InconsistentPartitionError("assignment length != grid size");
  check_index_map(deployment.aps.size(), deployment.bss.size(),
                  deployment.index_map);

  const std::size_t n_aps = deployment.aps.size();
  const std::size_t n_bss = deployment.bss.size();

  Residuals res;
  for (std::size_t n = 0; n < n_aps; ++n) {
    if (!(partition.volumes[n] > 0.0)) continue;
    const Vec2 target =
        (1.0 / (1.0 + beta)) *
        (partition.centroids[n] +
         beta * deployment.bss[deployment.index_map[n]]);
    res.ap = std::max(res.ap, dist(deployment.aps[n], target));
  }

  for (std::size_t m = 0; m < n_bss; ++m) {
    double vol = 0.0;
    Vec2 num{};
    for (std::size_t n = 0; n < n_aps; ++n) {
      if (deployment.index_map[n] != static_cast<int>(m)) continue;
      if (!(partition.volumes[n] > 0.0)) continue;
      vol += partition.volumes[n];
      num = num + partition.volumes[n] * partition.centroids[n];
    }
    if (!(vol > 0.0)) continue;  // unused BS: no condition applies
    res.bs = std::max(res.bs, dist(deployment.bss[m], num / vol));
  }
  return res;
}

}  // namespace tiered
