#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rsift/streamline.hpp"

namespace rsift {

/// Fixed set of antipodally-symmetric unit axes used to bin segment
/// directions. Axes are pairwise non-parallel.
struct DirectionBins {
  std::vector<std::array<double, 3>> axes;

  int size() const { return static_cast<int>(axes.size()); }

  /// Index of the axis with the largest |cos| against dir; ties take the
  /// lowest index.
  int pick(const std::array<double, 3>& dir) const;
};

/// B == 6 gives the icosahedral axis set; other counts use a deterministic
/// hemispherical Fibonacci spiral.
DirectionBins make_direction_bins(int n_axes);

/// One (voxel, direction bin) cell. cell_bin = voxel_index * B + bin.
struct Contribution {
  std::uint32_t cell_bin;
  double length_mm;
};

std::size_t voxel_index(const GridSpec& grid, int x, int y, int z);

/// Exact segment clipping against the voxel lattice; every sub-segment is
/// assigned to the direction bin of its parent segment. Entries are
/// aggregated per cell and sorted by cell_bin. Throws if a point is outside
/// the grid.
std::vector<Contribution> rasterize(const Streamline& s, const GridSpec& grid,
                                    const DirectionBins& bins);

/// Per-(voxel,bin) target amounts, normalized to sum to 1.
struct TargetDensityField {
  GridSpec grid;
  DirectionBins bins;
  std::vector<double> mu;  // voxel-major, bin-minor; size = voxel_count * B
  double mu_sq_sum = 0.0;

  std::size_t cell_count() const { return mu.size(); }
};

TargetDensityField build_target_field(const Tractogram& reference, const DirectionBins& bins);

void save_target_field(const TargetDensityField& field, const std::filesystem::path& path);
TargetDensityField load_target_field(const std::filesystem::path& path);

}  // namespace rsift
