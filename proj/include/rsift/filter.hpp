#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsift/density.hpp"
#include "rsift/streamline.hpp"

namespace rsift {

struct DegenerateSubsetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FilterParams {
  double epsilon_rel = 1e-3;       // relative convergence threshold
  std::size_t refit_interval = 0;  // 0 -> max(1, subset_size / 100)
  std::optional<std::size_t> target_count;
};

/// Rasterizes every streamline of a tractogram once so repeated filter runs
/// over subsets can share the work. Read-only afterwards.
class ContributionCache {
public:
  ContributionCache(const Tractogram& t, const TargetDensityField& field);

  const std::vector<Contribution>& contributions(std::size_t id) const { return per_id_[id]; }
  double in_grid_length(std::size_t id) const { return lengths_[id]; }
  std::size_t size() const { return per_id_.size(); }
  std::size_t cell_count() const { return cell_count_; }

private:
  std::vector<std::vector<Contribution>> per_id_;
  std::vector<double> lengths_;
  std::size_t cell_count_ = 0;
};

/// Mutable running track density for one subset, with the sums needed for
/// closed-form scale fits and incremental cost deltas.
class ContributionTable {
public:
  ContributionTable(std::span<const std::size_t> subset, const ContributionCache& cache,
                    const TargetDensityField& field);

  /// Closed-form minimizer of sum((lambda*TD - mu)^2). Throws
  /// DegenerateSubsetError when TD is identically zero.
  double lambda_star() const;

  double cost(double lambda) const;

  /// Exact cost change if id's contributions were removed, lambda held fixed.
  double removal_delta(std::size_t id, double lambda) const;

  void remove(std::size_t id);

  bool contains(std::size_t id) const { return id < present_.size() && present_[id] != 0; }
  std::size_t active_count() const { return active_; }
  const std::vector<double>& track_density() const { return td_; }
  const std::vector<std::size_t>& subset() const { return subset_; }

private:
  const ContributionCache* cache_;
  const TargetDensityField* field_;
  std::vector<std::size_t> subset_;
  std::vector<double> td_;
  std::vector<std::uint8_t> present_;
  double td_sq_sum_ = 0.0;
  double td_mu_sum_ = 0.0;
  std::size_t active_ = 0;
};

struct RemovalRecord {
  std::size_t id;
  double delta_cost;  // at the lambda current when the removal happened
  double cost_after;
};

struct FilterOutcome {
  std::vector<std::size_t> accepted;  // input order
  std::vector<std::size_t> rejected;  // removal order
  std::vector<RemovalRecord> removals;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  double lambda_final = 0.0;
  std::size_t iterations = 0;
};

/// Greedy density filter: repeatedly removes the candidate with the most
/// negative cost delta (ties to the lowest id) until the best delta no longer
/// clears -epsilon_rel * cost / survivors, or target_count is reached.
FilterOutcome sift_filter(std::span<const std::size_t> subset, const ContributionCache& cache,
                          const TargetDensityField& field, const FilterParams& params = {});

void save_outcome_csv(const FilterOutcome& outcome, const std::filesystem::path& path);

/// Free-standing helpers mirroring the table math on plain arrays.
double density_cost(std::span<const double> td, std::span<const double> mu, double lambda);
double density_lambda_star(std::span<const double> td, std::span<const double> mu);

}  // namespace rsift
