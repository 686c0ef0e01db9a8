#include "tiered/density.hpp"

#include <cmath>
#include <stdexcept>

namespace tiered {

DensitySpec DensitySpec::gaussian_mixture(
    std::vector<GaussianComponent> comps) {
  if (comps.empty())
    throw std::invalid_argument("gaussian mixture needs components");
  for (const auto& c : comps) {
    if (!(c.amp > 0.0))
      throw std::invalid_argument("gaussian amplitude must be positive");
    if (!(c.inv_scale > 0.0))
      throw std::invalid_argument("gaussian inv_scale must be positive");
  }
  DensitySpec d(Kind::GaussianMixture);
  d.components_ = std::move(comps);
  return d;
}

DensitySpec DensitySpec::grid_table(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("grid table is empty");
  for (double v : values) {
    if (!(v >= 0.0))
      throw std::invalid_argument("grid table values must be nonnegative");
  }
  DensitySpec d(Kind::GridTable);
  d.table_ = std::move(values);
  return d;
}

double DensitySpec::evaluate(Vec2 w) const {
  switch (kind_) {
    case Kind::Uniform:
      return 1.0;
    case Kind::GaussianMixture: {
      double f = 0.0;
      for (const auto& c : components_)
        f += c.amp * std::exp(-c.inv_scale * dist2(w, c.center));
      return f;
    }
    case Kind::GridTable:
      throw std::logic_error("grid table density has no pointwise form");
  }
  return 0.0;
}

}  // namespace tiered
