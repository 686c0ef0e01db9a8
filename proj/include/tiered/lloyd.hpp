#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tiered/partition.hpp"

namespace tiered {

struct LloydConfig {
  int max_iterations = 100;
  double rel_tolerance = 1e-9;  // stop when relative decrease drops below
  std::uint64_t seed = 0;
};

struct TraceEntry {
  double total = 0.0;
  double sensor_term = 0.0;
  double ap_term = 0.0;
};

/// Result of an optimizer run. trace[0] is the distortion of the initial
/// state; the sequence is non-increasing (up to roundoff slack).
struct Solution {
  Deployment deployment;
  PartitionState partition;
  DistortionReport report;
  std::vector<TraceEntry> trace;
  std::vector<TraceEntry> bs_trace;  // OTL only: the M-level quantizer run
  int iterations = 0;
};

struct RegularLloydResult {
  std::vector<Vec2> points;
  PartitionState partition;
  std::vector<double> trace;
  int iterations = 0;
};

/// Classical Lloyd iteration for a k-level quantizer on the grid:
/// centroid move / nearest-point repartition until the relative distortion
/// decrease falls below tolerance or max_iterations is hit. An empty init
/// draws k uniform points from config.seed.
RegularLloydResult regular_lloyd(const Grid& grid, int k,
                                 const std::vector<Vec2>& init,
                                 const LloydConfig& config);

/// One-tiered Lloyd: an M-level quantizer places the BSs, an independent
/// N-level quantizer provides the AP partition and pre-shrink points p',
/// then T(n) = nearest BS and p_n = (p'_n + beta q_T(n)) / (1 + beta).
/// Empty inits are drawn uniformly from config.seed (APs before BSs).
Solution otl(const Grid& grid, int n_aps, int n_bss, double beta,
             const std::vector<Vec2>& init_aps,
             const std::vector<Vec2>& init_bss, const LloydConfig& config);

/// Two-tiered Lloyd: sweeps of (1) AP shrink move, (2) energy-Voronoi
/// repartition, (3) BS cluster-centroid move, (4) nearest-BS reassignment.
/// Empty inits are drawn uniformly from config.seed (APs before BSs).
Solution ttl(const Grid& grid, int n_aps, int n_bss, double beta,
             const std::vector<Vec2>& init_aps,
             const std::vector<Vec2>& init_bss, const LloydConfig& config);

/// The TTL sweep broken into its four steps, for callers that need to
/// observe the cost between steps. Construction computes the nearest-BS
/// index map and the initial energy-Voronoi partition.
class TtlSweep {
 public:
  TtlSweep(const Grid& grid, std::vector<Vec2> aps, std::vector<Vec2> bss,
           double beta);

  void move_aps();      // APs with empty cells stay put
  void repartition();   // refreshes volumes and centroids
  void move_bss();      // BSs with empty clusters stay put
  void reassign();      // nearest-BS index map

  double total() const;
  DistortionReport report() const;
  Residuals residuals() const;

  const Deployment& deployment() const { return dep_; }
  const PartitionState& partition() const { return part_; }

 private:
  const Grid* grid_;
  double beta_;
  Deployment dep_;
  PartitionState part_;
};

/// Portable 64-bit generator: mt19937_64 with explicit uniform mapping
/// ((x >> 11) * 2^-53), so streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 mix; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// N + M i.i.d. uniform points on the region (APs drawn first, x before y).
std::pair<std::vector<Vec2>, std::vector<Vec2>> random_deployment(
    const Region& region, int n_aps, int n_bss, std::uint64_t seed);

}  // namespace tiered
