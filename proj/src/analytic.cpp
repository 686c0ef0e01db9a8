#include "tiered/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "tiered/errors.hpp"

namespace tiered {

namespace {

void check_counts(int n_aps, int n_bss) {
  if (n_bss < 1) throw std::invalid_argument("need at least one BS");
  if (n_aps < n_bss)
    throw std::invalid_argument("need at least as many APs as BSs");
}

double length_factor(int size, double beta) {
  return 1.0 / std::sqrt(beta + 1.0 / (static_cast<double>(size) * size));
}

double allocation_value(const std::vector<int>& sizes, double beta) {
  double s = 0.0;
  for (int e : sizes) s += length_factor(e, beta);
  return 1.0 / (s * s);
}

}  // namespace

Allocation optimal_allocation(int n_aps, int n_bss, double beta) {
  check_counts(n_aps, n_bss);
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");

  Allocation a;
  const int small = n_aps / n_bss;
  const int big = (n_aps + n_bss - 1) / n_bss;
  a.big_count = n_aps % n_bss;
  a.small_count = n_bss - a.big_count;
  a.big_len_factor = length_factor(big, beta);
  a.small_len_factor = length_factor(small, beta);
  a.sizes.insert(a.sizes.end(), a.big_count, big);
  a.sizes.insert(a.sizes.end(), a.small_count, small);
  const double denom =
      a.big_count * a.big_len_factor + a.small_count * a.small_len_factor;
  a.value = 1.0 / (denom * denom);
  return a;
}

Allocation allocation_bruteforce(int n_aps, int n_bss, double beta) {
  check_counts(n_aps, n_bss);
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  if (n_aps > 30 || n_bss > 6)
    throw TooLargeError("enumeration guarded to N <= 30, M <= 6");

  std::vector<int> current(n_bss, 1);
  std::vector<int> best;
  double best_value = 0.0;

  // enumerate compositions of N into M positive parts
  std::function<void(int, int)> visit = [&](int slot, int remaining) {
    if (slot == n_bss - 1) {
      current[slot] = remaining;
      const double v = allocation_value(current, beta);
      if (best.empty() || v < best_value) {
        best = current;
        best_value = v;
      }
      return;
    }
    const int slots_left = n_bss - slot - 1;
    for (int e = 1; e + slots_left <= remaining; ++e) {
      current[slot] = e;
      visit(slot + 1, remaining - e);
    }
  };
  visit(0, n_aps);

  std::sort(best.begin(), best.end(), std::greater<>());
  Allocation a;
  a.sizes = best;
  a.value = best_value;
  const int big = best.front();
  const int small = best.back();
  if (big == small) {
    a.big_count = 0;
    a.small_count = n_bss;
  } else {
    a.big_count = static_cast<int>(
        std::count(best.begin(), best.end(), big));
    a.small_count = n_bss - a.big_count;
  }
  a.big_len_factor = length_factor(big, beta);
  a.small_len_factor = length_factor(small, beta);
  return a;
}

Closed1DSolution optimal_uniform_1d(double s, double t, int n_aps, int n_bss,
                                    double beta) {
  if (!(t > s)) throw std::invalid_argument("interval needs t > s");
  const Allocation alloc = optimal_allocation(n_aps, n_bss, beta);

  const double mu = t - s;
  const double denom = alloc.big_count * alloc.big_len_factor +
                       alloc.small_count * alloc.small_len_factor;

  Closed1DSolution sol;
  sol.distortion = mu * mu / (12.0 * (1.0 + beta) * denom * denom);
  sol.cluster_bounds.push_back(s);
  double cursor = s;
  for (int m = 0; m < n_bss; ++m) {
    const int size = alloc.sizes[m];  // big clusters first
    const double factor =
        m < alloc.big_count ? alloc.big_len_factor : alloc.small_len_factor;
    const double cluster_len = factor * mu / denom;
    const double cluster_lo = cursor;
    cursor += cluster_len;
    if (m == n_bss - 1) cursor = t;  // close exactly against drift
    sol.cluster_bounds.push_back(cursor);
    const double q = 0.5 * (cluster_lo + cursor);
    sol.bss.push_back(q);
    const double cell_len = (cursor - cluster_lo) / size;
    for (int i = 0; i < size; ++i) {
      const double cell_lo = cluster_lo + i * cell_len;
      sol.cell_bounds.push_back(cell_lo);
      const double c = cell_lo + 0.5 * cell_len;
      sol.aps.push_back((c + beta * q) / (1.0 + beta));
      sol.index_map.push_back(m);
    }
  }
  sol.cell_bounds.push_back(t);
  return sol;
}

double quantizer_lower_bound(int n_points, double measure) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  if (!(measure > 0.0))
    throw std::invalid_argument("measure must be positive");
  return measure * measure /
         (12.0 * static_cast<double>(n_points) * n_points);
}

Deployment Closed1DSolution::to_deployment() const {
  Deployment dep;
  for (double p : aps) dep.aps.push_back({p, 0.0});
  for (double q : bss) dep.bss.push_back({q, 0.0});
  dep.index_map = index_map;
  return dep;
}

double Closed1DSolution::distortion_from_geometry(double beta) const {
  const double mu = cell_bounds.back() - cell_bounds.front();
  double acc = 0.0;
  for (std::size_t n = 0; n < aps.size(); ++n) {
    const double lo = cell_bounds[n];
    const double hi = cell_bounds[n + 1];
    const double len = hi - lo;
    const double c = 0.5 * (lo + hi);
    const double p = aps[n];
    const double q = bss[index_map[n]];
    // uniform cell: integral of (p-w)^2 = len*((p-c)^2 + len^2/12)
    acc += len * ((p - c) * (p - c) + len * len / 12.0);
    acc += beta * (p - q) * (p - q) * len;
  }
  return acc / mu;  // unit-mass density 1/(t-s)
}

ShrunkSolution single_bs_optimum(const Grid& grid,
                                 const std::vector<Vec2>& quantizer_points,
                                 const PartitionState& quantizer_partition,
                                 double beta) {
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  if (quantizer_partition.assign.size() != grid.size())
    throw InconsistentPartitionError("assignment length != grid size");
  if (quantizer_points.empty())
    throw std::invalid_argument("need at least one quantizer point");

  const Vec2 q = region_centroid(grid);
  ShrunkSolution sol;
  sol.deployment.bss = {q};
  sol.deployment.index_map.assign(quantizer_points.size(), 0);
  for (Vec2 x : quantizer_points)
    sol.deployment.aps.push_back((1.0 / (1.0 + beta)) * (x + beta * q));

  detail::Kahan dr, moment;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = grid.weight(k);
    dr.add(w * dist2(quantizer_points[quantizer_partition.assign[k]],
                     grid.point(k)));
    moment.add(w * dist2(q, grid.point(k)));
  }
  sol.predicted_distortion =
      dr.sum / (1.0 + beta) + beta / (1.0 + beta) * moment.sum;
  return sol;
}

}  // namespace tiered
