#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace rsift {

using Point = std::array<double, 3>;

/// Ordered polyline in world millimetres. Valid streamlines have at least two
/// points, finite coordinates and strictly positive arc length.
using Streamline = std::vector<Point>;

/// Isotropic voxel lattice anchored at the world origin.
struct GridSpec {
  std::array<int, 3> dims{0, 0, 0};
  double voxel_size = 1.0;

  double extent(int axis) const { return dims[static_cast<std::size_t>(axis)] * voxel_size; }
  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
  }
  bool contains(const Point& p) const {
    for (int a = 0; a < 3; ++a)
      if (!(p[static_cast<std::size_t>(a)] >= 0.0 && p[static_cast<std::size_t>(a)] <= extent(a)))
        return false;
    return true;
  }
};

struct Tractogram {
  std::vector<Streamline> streamlines;
  GridSpec grid;

  std::size_t size() const { return streamlines.size(); }
};

double arc_length(const Streamline& s);
Point centroid(const Streamline& s);

/// Throws std::invalid_argument if the streamline violates its invariants.
void validate_streamline(const Streamline& s);

/// Axis-aligned bounding box over all points; first = mins, second = maxs.
std::pair<Point, Point> bounding_box(const Tractogram& t);

}  // namespace rsift
