#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sg/selection.hpp"
#include "sg/signed_graph.hpp"

namespace sg {

enum class Rule { symmetric, asymmetric_constrained, altafini };

Rule rule_from_name(const std::string& name);
std::string rule_name(Rule rule);

struct UpdateParams {
  double alpha = 0.5;  // positive-update gain, in [0,1]
  double beta = 0.0;   // negative-update gain, >= 0
  // Asymmetric branch probabilities: i-only, j-only, both.
  double a = 1.0 / 3.0;
  double b = 1.0 / 3.0;
  double c = 1.0 / 3.0;
  double bound = 1.0;  // A, belief box [-A, A]
  Rule rule = Rule::symmetric;

  void validate() const;
};

/// Both endpoints move: toward each other on positive edges, apart on
/// negative ones.
void step_symmetric(std::vector<double>& x, int i, int j, Sign sign,
                    const UpdateParams& p);

/// One endpoint (probability a or b) or both (probability c) move by
/// (1-theta) x_m + theta x_other with theta = alpha (positive) or -beta
/// (negative), clamped to [-A, A]. i is the initiator.
void step_asymmetric_constrained(std::vector<double>& x, int i, int j,
                                 Sign sign, const UpdateParams& p,
                                 RngStream& rng);

/// Positive edges as in the symmetric rule; negative edges use the
/// sign-flipped averaging (1-beta) x_m - beta x_other, beta in (0,1).
void step_altafini(std::vector<double>& x, int i, int j, Sign sign,
                   const UpdateParams& p);

enum class StopReason { none, converged, diverged };

struct TrajectoryRecord {
  long long k;
  double spread;
  std::vector<double> x;  // empty unless snapshots requested
};

struct TrajectoryStats {
  std::vector<TrajectoryRecord> records;
  StopReason stop = StopReason::none;
  long long stop_k = 0;
  long long events = 0;
  double final_spread = 0.0;
  std::vector<double> final_x;
  /// Upper-triangular (i<j) running max of |x_i - x_j|; filled when
  /// track_pairs is set.
  std::vector<double> pair_max;
  /// Per-vertex counts of events spent inside the boundary bands
  /// [A - delta, A] and [-A, -A + delta], delta = 0.05 A.
  std::vector<long long> touch_high;
  std::vector<long long> touch_low;
};

struct SimulateOptions {
  long long horizon = 10000;
  long long record_every = 100;
  bool snapshots = false;
  bool track_pairs = false;
  /// Early stops; disable either with a negative value.
  double eps_conv = 1e-9;
  double m_div = -1.0;  // default: 1e6 * max(1, ||x0||_inf)
};

double spread_of(const std::vector<double>& x);

TrajectoryStats simulate(const SignedGraph& g, const SelectionModel& sel,
                         const UpdateParams& params, std::vector<double> x0,
                         const SimulateOptions& opt, RngStream& rng);

/// Trajectory CSV: header k,spread[,x0..x{n-1}]; final row always present.
void write_trajectory_csv(const TrajectoryStats& stats, int n,
                          const std::string& path);

}  // namespace sg
