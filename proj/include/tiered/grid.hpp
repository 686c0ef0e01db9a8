#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tiered/density.hpp"
#include "tiered/errors.hpp"
#include "tiered/geometry.hpp"

namespace tiered {

/// Midpoint-rule quadrature grid: cell k has center point(k) and weight
/// f(point(k)) * cell_area(). Cells exactly tile the region. Immutable
/// once built; safe to share across threads.
class Grid {
 public:
  Grid(Region region, int nx, int ny, std::vector<Vec2> points,
       std::vector<double> weights);

  const Region& region() const { return region_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return points_.size(); }

  Vec2 point(std::size_t k) const { return points_[k]; }
  double weight(std::size_t k) const { return weights_[k]; }

  const std::vector<Vec2>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  double total_mass() const { return total_mass_; }
  double cell_area() const { return cell_area_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  // Largest cell side; the length scale of discretization error.
  double cell_width() const { return dx_ > dy_ ? dx_ : dy_; }

 private:
  Region region_;
  int nx_, ny_;
  double dx_, dy_, cell_area_;
  std::vector<Vec2> points_;
  std::vector<double> weights_;
  double total_mass_;
};

/// Build a midpoint-rule grid with `resolution` cells per axis (ny = 1 for
/// intervals). Throws ZeroMassError when the density vanishes on every
/// cell, std::invalid_argument on bad resolution or table-size mismatch.
Grid build_grid(const Region& region, const DensitySpec& density,
                int resolution);

/// Mass-weighted centroid of the region: sum(w_k p_k) / sum(w_k).
Vec2 region_centroid(const Grid& grid);

/// Sum by pairwise (tree) reduction; deterministic and more accurate than
/// left-to-right accumulation on long inputs.
double pairwise_sum(std::span<const double> values);

namespace detail {

// compensated accumulator; keeps long moment sums stable
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

}  // namespace tiered
