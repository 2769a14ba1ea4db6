#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rsift/filter.hpp"
#include "rsift/streamline.hpp"

namespace rsift {

/// Number of runs for one subset size: ceil(tau * total / subset_size), so
/// every streamline collects on average at least tau votes per size.
std::size_t planned_runs(std::size_t total, std::size_t subset_size, int tau);

struct RsiftConfig {
  std::vector<std::size_t> subset_sizes;
  int tau = 5;
  std::uint64_t master_seed = 0;
  FilterParams filter;
  int threads = 0;  // 0 -> hardware concurrency
  int max_retries = 3;
};

/// One filter run: the sampled subset (in draw order) and its verdicts.
struct RunRecord {
  std::size_t subset_size = 0;
  std::size_t run_index = 0;
  int attempts = 1;
  std::vector<std::size_t> subset;
  std::vector<std::uint8_t> accepted;  // parallel to subset
};

class VoteLedger {
public:
  VoteLedger() = default;
  VoteLedger(std::size_t n_streamlines, std::vector<std::size_t> subset_sizes);

  void add_vote(std::size_t size_index, std::size_t id, bool positive);

  std::size_t n_streamlines() const { return n_; }
  const std::vector<std::size_t>& subset_sizes() const { return sizes_; }
  std::optional<std::size_t> size_index(std::size_t subset_size) const;

  std::uint32_t positives(std::size_t size_index, std::size_t id) const {
    return pos_[size_index][id];
  }
  std::uint32_t negatives(std::size_t size_index, std::size_t id) const {
    return neg_[size_index][id];
  }
  std::uint64_t total_positives(std::size_t id) const;
  std::uint64_t total_negatives(std::size_t id) const;

  bool operator==(const VoteLedger& other) const;

private:
  std::size_t n_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::uint32_t>> pos_;
  std::vector<std::vector<std::uint32_t>> neg_;
};

/// Runs the filter on k random subsets per configured size and accumulates
/// accept/reject votes. Deterministic for a fixed master seed, independent of
/// the thread count. Optionally returns every run's subset and verdicts.
VoteLedger run_rsift(const Tractogram& t, const TargetDensityField& field,
                     const RsiftConfig& config, std::vector<RunRecord>* manifests = nullptr);

/// P/(P+N) over all sizes; empty when the streamline received no votes.
std::optional<double> acceptance_rate(const VoteLedger& ledger, std::size_t id);
/// P_n/(P_n+N_n) for one subset size.
std::optional<double> acceptance_rate(const VoteLedger& ledger, std::size_t id,
                                      std::size_t subset_size);

enum class Label : std::uint8_t { Plausible, Implausible, Inconclusive, Unvoted };

const char* to_string(Label label);

struct LabelSet {
  std::vector<Label> labels;
  std::vector<double> ar;  // overall acceptance rate; NaN when unvoted
};

LabelSet assign_labels(const VoteLedger& ledger);

struct ProbeResult {
  std::size_t n_min = 0;
  std::size_t full_retained = 0;
  // (subset size, retained count) for every evaluated size, in evaluation order
  std::vector<std::pair<std::size_t, std::size_t>> evaluations;
};

/// Smallest subset size whose convergence-terminated run retains at least
/// survivor_fraction * (full-run retention), located by bisection over n.
ProbeResult probe_min_subset_size(const Tractogram& t, const TargetDensityField& field,
                                  const FilterParams& params, double survivor_fraction = 1.0,
                                  std::uint64_t seed = 0);

void save_ledger_csv(const VoteLedger& ledger, const std::filesystem::path& path);
VoteLedger load_ledger_csv(const std::filesystem::path& path);

void save_label_csv(const LabelSet& labels, const std::filesystem::path& path);
LabelSet load_label_csv(const std::filesystem::path& path);

void save_run_record_csv(const RunRecord& record, const std::filesystem::path& path);
RunRecord load_run_record_csv(const std::filesystem::path& path);

/// Brute-force recount of a ledger from per-run records.
VoteLedger recount_from_records(std::size_t n_streamlines,
                                const std::vector<std::size_t>& subset_sizes,
                                const std::vector<RunRecord>& records);

}  // namespace rsift
