#pragma once

#include <utility>
#include <vector>

#include "tiered/geometry.hpp"

namespace tiered {

/// One term of a Gaussian mixture: amp * exp(-inv_scale * |w - center|^2).
struct GaussianComponent {
  double amp = 1.0;
  Vec2 center;
  double inv_scale = 1.0;
};

/// Data-rate density over the region. Uniform means f == 1 (the objective
/// is an unnormalized integral, so no rescaling is applied). GridTable
/// carries one nonnegative value per grid cell and can only be bound to a
/// grid of matching size.
class DensitySpec {
 public:
  enum class Kind { Uniform, GaussianMixture, GridTable };

  static DensitySpec uniform() { return DensitySpec(Kind::Uniform); }

  static DensitySpec gaussian_mixture(std::vector<GaussianComponent> comps);

  static DensitySpec grid_table(std::vector<double> values);

  Kind kind() const { return kind_; }
  const std::vector<GaussianComponent>& components() const {
    return components_;
  }
  const std::vector<double>& table() const { return table_; }

  // Pointwise evaluation; valid for Uniform and GaussianMixture only.
  double evaluate(Vec2 w) const;

 private:
  explicit DensitySpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<GaussianComponent> components_;
  std::vector<double> table_;
};

}  // namespace tiered
