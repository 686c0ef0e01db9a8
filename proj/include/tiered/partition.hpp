#pragma once

#include <vector>

#include "tiered/grid.hpp"

namespace tiered {

/// AP and BS positions plus the AP -> BS index map (0-based).
struct Deployment {
  std::vector<Vec2> aps;
  std::vector<Vec2> bss;
  std::vector<int> index_map;
};

/// Extensional AP partition on a grid: assign[k] is the AP owning cell k.
/// volumes[n] is the f-mass of AP n's cell and centroids[n] its weighted
/// centroid (meaningful only where volumes[n] > 0).
struct PartitionState {
  std::vector<int> assign;
  std::vector<double> volumes;
  std::vector<Vec2> centroids;
};

struct DistortionReport {
  double total = 0.0;
  double sensor_term = 0.0;  // sum w_k |p_n - w_k|^2
  double ap_term = 0.0;      // beta-weighted AP-to-BS part
  std::vector<double> per_ap;
  std::vector<double> per_bs;
};

struct Residuals {
  double ap = 0.0;
  double bs = 0.0;
};

/// Nearest BS for each AP; ties broken by lowest BS index.
std::vector<int> best_index_map(const std::vector<Vec2>& aps,
                                const std::vector<Vec2>& bss);

/// Assign every grid cell to the AP minimizing
/// |p_n - w|^2 + beta |p_n - q_T(n)|^2 (ties -> lowest AP index), then
/// accumulate per-AP volumes and centroids. Empty cells are legal.
PartitionState energy_voronoi(const Grid& grid, const std::vector<Vec2>& aps,
                              const std::vector<Vec2>& bss,
                              const std::vector<int>& index_map, double beta);

/// Total weighted power of a deployment under a given partition, with the
/// sensor/AP split and per-AP / per-BS breakdowns.
DistortionReport distortion(const Grid& grid, const Deployment& deployment,
                            const PartitionState& partition, double beta);

/// Max deviation from the stationarity conditions: AP n against
/// (c_n + beta q_T(n))/(1+beta), BS m against the volume-weighted centroid
/// of its cluster's cell centroids. Empty cells / empty clusters skipped.
Residuals fixed_point_residual(const Grid& grid, const Deployment& deployment,
                               const PartitionState& partition, double beta);

}  // namespace tiered
