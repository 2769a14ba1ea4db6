#pragma once

#include <filesystem>
#include <stdexcept>

#include "rsift/streamline.hpp"

namespace rsift {

struct TrackFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a track file: text header (magic line, "key: value" pairs, END),
/// then little-endian float32 triplets; a NaN triplet closes each streamline
/// and a +Inf triplet closes the body. Coordinates are widened to double
/// without loss, so a save/load cycle is bit-exact at storage precision.
Tractogram load_track_file(const std::filesystem::path& path);

void save_track_file(const Tractogram& t, const std::filesystem::path& path);

}  // namespace rsift
