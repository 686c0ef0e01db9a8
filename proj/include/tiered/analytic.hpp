#pragma once

#include <vector>

#include "tiered/lloyd.hpp"
#include "tiered/partition.hpp"

namespace tiered {

/// Optimal split of N AP slots over M clusters. sizes is the multiset of
/// cluster AP counts (descending); big clusters hold ceil(N/M) APs and
/// small ones floor(N/M). len_factor_* are the per-cluster length factors
/// (beta + size^-2)^-1/2; value is the allocation objective at the
/// minimizer, (big_count*big_len_factor + small_count*small_len_factor)^-2.
struct Allocation {
  std::vector<int> sizes;
  int big_count = 0;
  int small_count = 0;
  double big_len_factor = 0.0;
  double small_len_factor = 0.0;
  double value = 0.0;
};

/// Closed-form optimal deployment on a uniform 1D interval: M cluster
/// intervals (big clusters first), each split uniformly into AP cells,
/// BS at the cluster centroid, AP at (c_n + beta q)/(1+beta). The
/// distortion is reported for the unit-mass density f = 1/(t-s); under a
/// constant density c it scales by c*(t-s).
struct Closed1DSolution {
  std::vector<double> bss;
  std::vector<double> aps;
  std::vector<double> cell_bounds;     // N+1, tile [s,t]
  std::vector<double> cluster_bounds;  // M+1, tile [s,t]
  std::vector<int> index_map;
  double distortion = 0.0;  // closed-form minimum

  /// Same deployment as 2D points (y = 0), diffable against lloyd output.
  Deployment to_deployment() const;

  /// Re-derives the distortion from the constructed geometry (cell second
  /// moments plus beta offsets) instead of the closed formula; an
  /// independent route for consistency checks.
  double distortion_from_geometry(double beta) const;
};

/// A single-BS optimum assembled from an N-level quantizer: BS at the
/// region centroid, APs shrunk toward it, the quantizer's partition kept.
struct ShrunkSolution {
  Deployment deployment;
  double predicted_distortion = 0.0;
};

/// Minimizing allocation of N APs over M clusters (N >= M >= 1); the
/// multiset {ceil(N/M) x (N mod M), floor(N/M) x (M - N mod M)}.
Allocation optimal_allocation(int n_aps, int n_bss, double beta);

/// Exhaustive minimum over all compositions of N into M positive parts.
/// Oracle for optimal_allocation; guarded to N <= 30, M <= 6.
Allocation allocation_bruteforce(int n_aps, int n_bss, double beta);

/// Closed-form optimal two-tier deployment for a uniform density on [s,t].
Closed1DSolution optimal_uniform_1d(double s, double t, int n_aps, int n_bss,
                                    double beta);

/// Floor on the N-level quantizer distortion of a uniform 1D set of the
/// given measure: measure^2 / (12 N^2).
double quantizer_lower_bound(int n_points, double measure);

/// Single-BS (M = 1) optimum for an arbitrary gridded density, given the
/// points and partition of an N-level quantizer for it: q* = centroid,
/// p*_n = (x*_n + beta q*)/(1+beta), partition unchanged; the predicted
/// distortion blends the quantizer distortion with the centroid moment.
ShrunkSolution single_bs_optimum(const Grid& grid,
                                 const std::vector<Vec2>& quantizer_points,
                                 const PartitionState& quantizer_partition,
                                 double beta);

}  // namespace tiered
