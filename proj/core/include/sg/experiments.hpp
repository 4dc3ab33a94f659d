#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sg/dynamics.hpp"
#include "sg/signed_graph.hpp"
#include "sg/spectral.hpp"

namespace sg {

enum class Outcome { converged, diverged, clustered, oscillating, undetermined };

std::string outcome_name(Outcome o);

struct TrialOutcome {
  Outcome cls = Outcome::undetermined;
  long long stop_k = 0;
  long long events = 0;
  double final_spread = 0.0;
  /// Running max of |x_i - x_j| per unordered pair (row-major i*n+j, i<j).
  std::vector<double> pair_max;
  /// +1/-1 boundary assignment per vertex when clustered, empty otherwise.
  std::vector<int> cluster;
  std::vector<long long> touch_high;
  std::vector<long long> touch_low;
  double x0_inf_norm = 0.0;
};

/// One Monte Carlo configuration; x0 empty means uniform-random in [-A, A]
/// drawn from the trial's substream.
struct TrialConfig {
  const SignedGraph* graph = nullptr;
  const SelectionModel* selection = nullptr;
  UpdateParams params;
  std::vector<double> x0;
  long long horizon = 10000;
  long long record_every = 0;  // 0: horizon/200, at least 1
  double eps_conv = 1e-9;
  double m_div = -1.0;  // negative: 1e6 * max(1, ||x0||_inf)
};

/// Independent seeded trials; trial t uses RngStream::substream(base_seed, t)
/// so outcomes are bit-identical regardless of execution order.
std::vector<TrialOutcome> run_trials(const TrialConfig& config, int trials,
                                     std::uint64_t base_seed);

TrialOutcome run_single_trial(const TrialConfig& config, std::uint64_t base_seed,
                              int trial_index);

struct NoSurvivorReport {
  int diverged_trials = 0;
  int passing = 0;
  double fraction = 0.0;  // of diverged trials with min-pair max > threshold
  double threshold = 0.0;
};

/// For each diverged trial checks that every pair's running-max separation
/// exceeds S = 100 ||x0||_inf.
NoSurvivorReport no_survivor_check(const std::vector<TrialOutcome>& outcomes);

struct LiveOrDieReport {
  double undetermined_fraction_short = 0.0;
  double undetermined_fraction_long = 0.0;
  bool shrinks = false;
};

/// Trichotomy consistency: the undetermined fraction at 10x horizon must not
/// exceed the fraction at the base horizon.
LiveOrDieReport live_or_die_check(const std::vector<TrialOutcome>& at_horizon,
                                  const std::vector<TrialOutcome>& at_10x);

struct SweepPoint {
  double beta = 0.0;
  double p = -1.0;  // ER density when sweeping p; -1 otherwise
  int trials = 0;
  double frac_converged = 0.0;
  double frac_diverged = 0.0;
  double frac_clustered = 0.0;
  double frac_oscillating = 0.0;
  double frac_undetermined = 0.0;
  double f_value = 0.0;
  double beta_star = -1.0;
  double beta_natural = -1.0;
  double ms_conv_bound = 0.0;
  double lambda_star = -1.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
};

/// Monte Carlo classification fractions per beta grid point with the spectral
/// overlay columns for the same model.
SweepResult sweep_beta(const TrialConfig& config, const SpectralModel& model,
                       const std::vector<double>& beta_grid, int trials,
                       std::uint64_t base_seed);

void write_sweep_csv(const SweepResult& result, const std::string& path);

/// Complete graph K_n with each edge independently negative with
/// probability p.
SignedGraph er_negative_graph(int n, double p, RngStream& rng);

struct ClusteringReport {
  int clustered_trials = 0;
  int group_consistent = 0;   // assignment constant on each partition group
  int opposite_boundary = 0;  // strong balance: the two groups differ
  double consistent_fraction = 0.0;
};

/// Verifies clustered trials against a balance partition; `strong` adds the
/// opposite-boundary requirement B1 + B2 = 0.
ClusteringReport clustering_check(const std::vector<TrialOutcome>& outcomes,
                                  const std::vector<std::vector<int>>& partition,
                                  bool strong);

struct OscillationReport {
  int trials = 0;
  int all_vertices_both_bands = 0;
  double fraction = 0.0;
};

/// Fraction of trials in which every vertex spent time in both boundary
/// bands.
OscillationReport oscillation_check(const std::vector<TrialOutcome>& outcomes);

}  // namespace sg
