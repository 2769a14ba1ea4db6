#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rsift/rng.hpp"
#include "rsift/streamline.hpp"

namespace rsift {

/// Parameters for the synthetic bundle generator. Bundles are jittered
/// quadratic arcs between endpoint regions placed around the grid centre.
struct PhantomSpec {
  int n_bundles = 6;
  int streamlines_per_bundle = 40;
  std::array<int, 3> grid_dims{48, 48, 48};
  double voxel_size = 2.5;
  double min_length_mm = 40.0;
  double max_length_mm = 250.0;
  double bundle_radius_mm = 2.0;
  double curvature = 0.35;  // control-point offset as a fraction of the chord
  double step_mm = 1.5;
  std::uint64_t rng_seed = 1;
};

enum class TruthLabel : std::uint8_t { TruePositive, FalsePositive, Redundant };

const char* to_string(TruthLabel label);

struct TruthRecord {
  TruthLabel label = TruthLabel::TruePositive;
  int multiplicity = 1;          // occurrences of this streamline's source in the tractogram
  std::int64_t provenance = -1;  // ground-truth id this streamline derives from
};

struct LabeledTractogram {
  Tractogram tractogram;
  std::vector<TruthRecord> truth;  // one record per streamline id
  std::vector<std::size_t> excluded_sources;  // ids dropped to even out groups
};

Tractogram generate_ground_truth(const PhantomSpec& spec);

/// Rigid rotation about the centroid with Euler angles drawn uniformly from
/// [45, 315] degrees; redraws until the result fits the grid.
Streamline distort_rotate(const Streamline& s, const GridSpec& grid, SplitMix64& rng,
                          int max_attempts = 100);

/// Fill ratio of the reference datasets: total streamlines per ground-truth
/// streamline after adding distorted filler.
inline std::size_t default_fp_total(std::size_t ground_truth_count) {
  return static_cast<std::size_t>(ground_truth_count * 89570.0 / 12196.0 + 0.5);
}

/// First half of the ground truth kept verbatim, second half rotated, plus
/// rotated copies of random sources appended until target_total is reached.
LabeledTractogram build_fp_experiment(const Tractogram& ground_truth, std::size_t target_total,
                                      std::uint64_t seed);

/// First half kept verbatim; the second half is split into five groups that
/// appear 2, 3, 5, 10 and 49 times respectively (copies share provenance).
LabeledTractogram build_redundancy_experiment(const Tractogram& ground_truth);

void save_truth_csv(const LabeledTractogram& lt, const std::filesystem::path& path);
std::vector<TruthRecord> load_truth_csv(const std::filesystem::path& path);

}  // namespace rsift
