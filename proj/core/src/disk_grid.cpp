#include "gft/disk_grid.hpp"

#include <algorithm>
#include <cmath>

#include "gft/error.hpp"

namespace gft {

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_ring) : radii_(std::move(radii)), angles_(angles_per_ring) {
  if (radii_.empty()) throw Error(ErrorCode::BadGridSpec, "grid needs at least one radius");
  if (angles_ < 8) throw Error(ErrorCode::BadGridSpec, "grid needs at least 8 angles per ring");
  for (double r : radii_)
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::BadGridSpec, "grid radii must lie in (0, 1)");
  std::sort(radii_.begin(), radii_.end());
  radii_.erase(std::unique(radii_.begin(), radii_.end()), radii_.end());

  points_.reserve(radii_.size() * static_cast<std::size_t>(angles_));
  for (double r : radii_)
    for (int k = 0; k < angles_; ++k) points_.push_back(std::polar(r, 2.0 * kPi * k / angles_));
}

DiskGrid DiskGrid::default_profile() {
  std::vector<double> radii;
  for (int k = 1; k <= 19; ++k) radii.push_back(0.05 * k);
  for (double r : {0.97, 0.98, 0.99, 0.995}) radii.push_back(r);
  return DiskGrid(std::move(radii), 720);
}

DiskGrid DiskGrid::coarse_profile() {
  std::vector<double> radii;
  for (int k = 1; k <= 9; ++k) radii.push_back(0.1 * k);
  radii.push_back(0.95);
  radii.push_back(0.99);
  return DiskGrid(std::move(radii), 180);
}

DiskGrid DiskGrid::scaled(double factor) const {
  if (!(factor > 0.0 && factor <= 1.0)) throw Error(ErrorCode::BadGridSpec, "scale factor must lie in (0, 1]");
  std::vector<double> radii = radii_;
  for (double& r : radii) r *= factor;
  return DiskGrid(std::move(radii), angles_);
}

DiskGrid sample_grid(std::vector<double> radii, int angles_per_ring) { return DiskGrid(std::move(radii), angles_per_ring); }

}  // namespace gft
