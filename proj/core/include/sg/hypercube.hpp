#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

/// Ordered sequence of positive-edge pairs; applied with alpha = 1/2 a
/// hypercube-generated schedule of length (n log2 n)/2 drives any state to
/// its average.
struct PairSchedule {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
};

/// Recursive construction on vertices {0,...,2^m - 1} read as bit strings:
/// schedule for the half with top bit 0, same for top bit 1, then the
/// 2^(m-1) cross pairs differing only in the top bit.
PairSchedule hypercube_schedule(int m);
/// Same with labeling[code] giving the host-graph vertex for each code.
PairSchedule hypercube_schedule(int m, const std::vector<int>& labeling);

struct ScheduleVerification {
  bool pass = false;
  double residual = 0.0;  // ||product - U||_inf
};

/// Assembles the product of the W+ matrices at the given alpha and compares
/// with the averaging projector at 1e-12.
ScheduleVerification verify_schedule(const PairSchedule& schedule, int n,
                                     double alpha);

struct FiniteTimeChecks {
  bool alpha_is_half = false;
  bool power_of_two = false;
  bool has_matching = false;
  bool all_hold = false;
  std::optional<std::vector<std::pair<int, int>>> matching;
};

/// Necessary conditions for finite-time consensus: alpha = 1/2, n = 2^m,
/// positive subgraph has a perfect matching.
FiniteTimeChecks finite_time_necessary_checks(const SignedGraph& g,
                                              double alpha);

inline constexpr int kHypercubeSearchBound = 4;  // dimension m

/// Backtracking embedding of the m-cube into the positive subgraph; requires
/// n = 2^m and m <= kHypercubeSearchBound. Engaged result maps codes to
/// vertex ids.
std::optional<std::vector<int>> find_hypercube_labeling(const SignedGraph& g,
                                                        int m);

/// Throws InputError if any scheduled pair is not a positive edge of g.
void check_schedule_edges(const SignedGraph& g, const PairSchedule& schedule);

/// Schedule file: text lines "i j", applied top to bottom.
PairSchedule load_schedule(const std::string& path, int n);
void save_schedule(const PairSchedule& schedule, const std::string& path);

/// Applies the schedule deterministically with the given alpha.
std::vector<double> apply_schedule(const PairSchedule& schedule,
                                   std::vector<double> x, double alpha);

}  // namespace sg
