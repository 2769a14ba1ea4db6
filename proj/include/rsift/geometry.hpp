#pragma once

#include <array>
#include <cstddef>

#include "rsift/streamline.hpp"

namespace rsift {

/// Resample to exactly n_points at equal arc-length spacing with linear
/// interpolation. Endpoints are copied verbatim. n_points must be >= 2.
Streamline resample(const Streamline& s, std::size_t n_points);

/// Ramer-Douglas-Peucker simplification with a perpendicular-distance
/// criterion. The result is a subsequence of the input containing both
/// endpoints; every input point lies within tolerance_mm of the output.
Streamline compress(const Streamline& s, double tolerance_mm);

/// Per-axis affine map sending [lo,hi] -> [-1,1]; a degenerate axis maps to 0.
struct NormalizationRecord {
  Point lo{0, 0, 0};
  Point hi{0, 0, 0};

  Point apply(const Point& p) const;
  Point invert(const Point& p) const;
};

std::pair<Tractogram, NormalizationRecord> normalize_coordinates(const Tractogram& t);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Rotation matrix R = Rz(rz) * Ry(ry) * Rx(rx), angles in radians.
Matrix3 euler_rotation(double rz, double ry, double rx);

Point apply_rotation(const Matrix3& m, const Point& p);

Streamline rotate_about(const Streamline& s, const Matrix3& m, const Point& center);

double point_segment_distance(const Point& p, const Point& a, const Point& b);

}  // namespace rsift
