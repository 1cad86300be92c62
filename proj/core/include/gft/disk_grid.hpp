#pragma once

#include <cstddef>
#include <vector>

#include "gft/complex_power.hpp"

namespace gft {

/// Polar sample of the open unit disk: rings r_i x angles 2 pi k / K.
/// Points are stored ring-major, so ring i occupies [i K, (i + 1) K).
class DiskGrid {
 public:
  /// Radii are sorted and deduplicated. Throws BadGridSpec unless every
  /// radius lies in (0, 1), the list is nonempty and K >= 8.
  DiskGrid(std::vector<double> radii, int angles_per_ring);

  /// {0.05, 0.10, ..., 0.95, 0.97, 0.98, 0.99, 0.995} x 720.
  static DiskGrid default_profile();
  /// {0.1, 0.2, ..., 0.9, 0.95, 0.99} x 180, for quick interactive checks.
  static DiskGrid coarse_profile();

  const std::vector<double>& radii() const { return radii_; }
  int angles_per_ring() const { return angles_; }
  std::size_t ring_count() const { return radii_.size(); }
  std::size_t size() const { return points_.size(); }

  const std::vector<cplx>& points() const { return points_; }
  cplx point(std::size_t ring, int k) const { return points_[ring * static_cast<std::size_t>(angles_) + k]; }

  /// Same angles with every radius multiplied by factor in (0, 1].
  DiskGrid scaled(double factor) const;

 private:
  std::vector<double> radii_;
  int angles_;
  std::vector<cplx> points_;
};

DiskGrid sample_grid(std::vector<double> radii, int angles_per_ring);

}  // namespace gft
