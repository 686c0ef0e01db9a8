#include "tiered/grid.hpp"

#include <stdexcept>

#include "tiered/errors.hpp"

namespace tiered {

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Grid::Grid(Region region, int nx, int ny, std::vector<Vec2> points,
           std::vector<double> weights)
    : region_(region),
      nx_(nx),
      ny_(ny),
      points_(std::move(points)),
      weights_(std::move(weights)) {
  dx_ = (region_.x1() - region_.x0()) / nx_;
  dy_ = region_.kind() == Region::Kind::Interval
            ? 0.0
            : (region_.y1() - region_.y0()) / ny_;
  cell_area_ = region_.kind() == Region::Kind::Interval ? dx_ : dx_ * dy_;
  total_mass_ = pairwise_sum(weights_);
}

Grid build_grid(const Region& region, const DensitySpec& density,
                int resolution) {
  if (resolution < 1)
    throw std::invalid_argument("grid resolution must be >= 1");

  const int nx = resolution;
  const int ny = region.kind() == Region::Kind::Interval ? 1 : resolution;
  const std::size_t count =
      static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);

  if (density.kind() == DensitySpec::Kind::GridTable &&
      density.table().size() != count) {
    throw std::invalid_argument("grid table size does not match grid");
  }

  const double dx = (region.x1() - region.x0()) / nx;
  const double dy = region.kind() == Region::Kind::Interval
                        ? 0.0
                        : (region.y1() - region.y0()) / ny;
  const double area =
      region.kind() == Region::Kind::Interval ? dx : dx * dy;

  std::vector<Vec2> points(count);
  std::vector<double> weights(count);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t k =
          static_cast<std::size_t>(iy) * nx + static_cast<std::size_t>(ix);
      const Vec2 p{region.x0() + (ix + 0.5) * dx,
                   region.kind() == Region::Kind::Interval
                       ? 0.0
                       : region.y0() + (iy + 0.5) * dy};
      points[k] = p;
      const double f = density.kind() == DensitySpec::Kind::GridTable
                           ? density.table()[k]
                           : density.evaluate(p);
      weights[k] = f * area;
    }
  }

  Grid grid(region, nx, ny, std::move(points), std::move(weights));
  if (!(grid.total_mass() > 0.0))
    throw ZeroMassError("density has zero mass on the region");
  return grid;
}

Vec2 region_centroid(const Grid& grid) {
  if (!(grid.total_mass() > 0.0))
    throw ZeroMassError("centroid of a zero-mass grid");
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    sx += grid.weight(k) * grid.point(k).x;
    sy += grid.weight(k) * grid.point(k).y;
  }
  return {sx / grid.total_mass(), sy / grid.total_mass()};
}

}  // namespace tiered
