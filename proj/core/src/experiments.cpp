#include "sg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace sg {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::converged: return "converged";
    case Outcome::diverged: return "diverged";
    case Outcome::clustered: return "clustered";
    case Outcome::oscillating: return "oscillating";
    case Outcome::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// +1 / -1 when x_i sits within eps of the matching boundary, 0 otherwise.
std::vector<int> boundary_assignment(const std::vector<double>& x, double A,
                                     double eps) {
  std::vector<int> out(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= A - eps)
      out[i] = 1;
    else if (x[i] <= -A + eps)
      out[i] = -1;
  }
  return out;
}

}  // namespace

TrialOutcome run_single_trial(const TrialConfig& config,
                              std::uint64_t base_seed, int trial_index) {
  const SignedGraph& g = *config.graph;
  const SelectionModel& sel = *config.selection;
  const int n = g.order();
  RngStream rng = RngStream::substream(base_seed, trial_index);

  std::vector<double> x0 = config.x0;
  if (x0.empty()) {
    x0.resize(n);
    for (double& v : x0)
      v = rng.next_uniform(-config.params.bound, config.params.bound);
  }
  double xinf = 0.0;
  for (double v : x0) xinf = std::max(xinf, std::abs(v));

  SimulateOptions opt;
  opt.horizon = config.horizon;
  opt.record_every =
      config.record_every > 0 ? config.record_every
                              : std::max<long long>(1, config.horizon / 200);
  opt.snapshots = true;
  opt.track_pairs = true;
  opt.eps_conv = config.eps_conv;
  opt.m_div = config.m_div;

  TrajectoryStats st = simulate(g, sel, config.params, std::move(x0), opt, rng);

  TrialOutcome out;
  out.stop_k = st.stop == StopReason::none ? st.events : st.stop_k;
  out.events = st.events;
  out.final_spread = st.final_spread;
  out.pair_max = std::move(st.pair_max);
  out.touch_high = std::move(st.touch_high);
  out.touch_low = std::move(st.touch_low);
  out.x0_inf_norm = xinf;

  if (st.stop == StopReason::converged) {
    out.cls = Outcome::converged;
    return out;
  }
  if (st.stop == StopReason::diverged) {
    out.cls = Outcome::diverged;
    return out;
  }

  if (config.params.rule == Rule::asymmetric_constrained) {
    const double A = config.params.bound;
    const double eps_cluster = 0.05 * A;
    // Clustered: boundary assignment complete and unchanged over the
    // trailing 10% of the horizon.
    const long long window_start =
        config.horizon - std::max<long long>(1, config.horizon / 10);
    std::vector<int> assignment;
    bool stable = true;
    int checked = 0;
    for (const auto& r : st.records) {
      if (r.k < window_start || r.x.empty()) continue;
      auto a = boundary_assignment(r.x, A, eps_cluster);
      if (std::any_of(a.begin(), a.end(), [](int v) { return v == 0; })) {
        stable = false;
        break;
      }
      if (assignment.empty())
        assignment = std::move(a);
      else if (a != assignment) {
        stable = false;
        break;
      }
      ++checked;
    }
    if (stable && checked > 0) {
      out.cls = Outcome::clustered;
      out.cluster = std::move(assignment);
      return out;
    }
    int both = 0;
    for (int i = 0; i < n; ++i)
      if (out.touch_high[i] >= 2 && out.touch_low[i] >= 2) ++both;
    if (both > 0) {
      out.cls = Outcome::oscillating;
      return out;
    }
  }
  out.cls = Outcome::undetermined;
  return out;
}

std::vector<TrialOutcome> run_trials(const TrialConfig& config, int trials,
                                     std::uint64_t base_seed) {
  config.params.validate();
  std::vector<TrialOutcome> out;
  out.reserve(trials);
  for (int t = 0; t < trials; ++t)
    out.push_back(run_single_trial(config, base_seed, t));
  return out;
}

NoSurvivorReport no_survivor_check(const std::vector<TrialOutcome>& outcomes) {
  NoSurvivorReport rep;
  for (const auto& o : outcomes) {
    if (o.cls != Outcome::diverged) continue;
    ++rep.diverged_trials;
    const double threshold = 100.0 * std::max(1e-300, o.x0_inf_norm);
    rep.threshold = threshold;
    const int n = static_cast<int>(o.touch_high.size());
    double min_pair = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        min_pair =
            std::min(min_pair, o.pair_max[static_cast<size_t>(i) * n + j]);
    if (min_pair > threshold) ++rep.passing;
  }
  if (rep.diverged_trials == 0)
    throw PreconditionError("no_survivor_check requires >= 1 diverged trial");
  rep.fraction = static_cast<double>(rep.passing) / rep.diverged_trials;
  return rep;
}

namespace {

double undetermined_fraction(const std::vector<TrialOutcome>& outcomes) {
  if (outcomes.empty()) return 0.0;
  int u = 0;
  for (const auto& o : outcomes)
    if (o.cls == Outcome::undetermined) ++u;
  return static_cast<double>(u) / outcomes.size();
}

}  // namespace

LiveOrDieReport live_or_die_check(const std::vector<TrialOutcome>& at_horizon,
                                  const std::vector<TrialOutcome>& at_10x) {
  LiveOrDieReport rep;
  rep.undetermined_fraction_short = undetermined_fraction(at_horizon);
  rep.undetermined_fraction_long = undetermined_fraction(at_10x);
  rep.shrinks =
      rep.undetermined_fraction_long <= rep.undetermined_fraction_short;
  return rep;
}

SweepResult sweep_beta(const TrialConfig& config, const SpectralModel& model,
                       const std::vector<double>& beta_grid, int trials,
                       std::uint64_t base_seed) {
  for (size_t i = 1; i < beta_grid.size(); ++i)
    if (beta_grid[i] < beta_grid[i - 1])
      throw PreconditionError("beta grid must be ascending");
  SweepResult res;
  std::uint64_t point_seed = base_seed;
  for (double beta : beta_grid) {
    TrialConfig c = config;
    c.params.beta = beta;
    auto outcomes = run_trials(c, trials, point_seed++);
    SweepPoint pt;
    pt.beta = beta;
    pt.trials = trials;
    for (const auto& o : outcomes) {
      switch (o.cls) {
        case Outcome::converged: pt.frac_converged += 1; break;
        case Outcome::diverged: pt.frac_diverged += 1; break;
        case Outcome::clustered: pt.frac_clustered += 1; break;
        case Outcome::oscillating: pt.frac_oscillating += 1; break;
        case Outcome::undetermined: pt.frac_undetermined += 1; break;
      }
    }
    pt.frac_converged /= trials;
    pt.frac_diverged /= trials;
    pt.frac_clustered /= trials;
    pt.frac_oscillating /= trials;
    pt.frac_undetermined /= trials;
    const double alpha = c.params.alpha;
    pt.f_value = model.f_value(alpha, beta);
    if (model.positive_connected() && alpha > 0.0) {
      pt.beta_star = model.beta_star(alpha);
      pt.beta_natural = model.beta_natural(alpha);
    }
    pt.ms_conv_bound = model.mean_square_bounds(alpha, beta).conv_bound;
    auto ls = model.lambda_star(alpha, beta);
    if (ls.converged) pt.lambda_star = ls.value;
    res.points.push_back(pt);
  }
  return res;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write sweep CSV: " + path);
  out << "beta,p,trials,frac_converged,frac_diverged,frac_clustered,"
         "frac_oscillating,frac_undetermined,f_value,beta_star,beta_natural,"
         "ms_conv_bound,lambda_star\n";
  out.precision(17);
  for (const auto& pt : result.points) {
    out << pt.beta << ',' << pt.p << ',' << pt.trials << ','
        << pt.frac_converged << ',' << pt.frac_diverged << ','
        << pt.frac_clustered << ',' << pt.frac_oscillating << ','
        << pt.frac_undetermined << ',' << pt.f_value << ',' << pt.beta_star
        << ',' << pt.beta_natural << ',' << pt.ms_conv_bound << ','
        << pt.lambda_star << '\n';
  }
}

SignedGraph er_negative_graph(int n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back(
          {u, v, rng.next_double() < p ? Sign::negative : Sign::positive});
  return SignedGraph(n, std::move(edges));
}

ClusteringReport clustering_check(const std::vector<TrialOutcome>& outcomes,
                                  const std::vector<std::vector<int>>& partition,
                                  bool strong) {
  if (partition.size() < 2)
    throw PreconditionError(
        "clustering_check requires a balance partition with >= 2 groups");
  ClusteringReport rep;
  for (const auto& o : outcomes) {
    if (o.cls != Outcome::clustered) continue;
    ++rep.clustered_trials;
    bool consistent = true;
    std::vector<int> group_sign(partition.size(), 0);
    for (size_t gi = 0; gi < partition.size() && consistent; ++gi) {
      for (int v : partition[gi]) {
        if (group_sign[gi] == 0)
          group_sign[gi] = o.cluster[v];
        else if (group_sign[gi] != o.cluster[v])
          consistent = false;
      }
    }
    if (!consistent) continue;
    ++rep.group_consistent;
    if (strong && partition.size() == 2 && group_sign[0] != group_sign[1])
      ++rep.opposite_boundary;
  }
  if (rep.clustered_trials > 0)
    rep.consistent_fraction =
        static_cast<double>(rep.group_consistent) / rep.clustered_trials;
  return rep;
}

OscillationReport oscillation_check(const std::vector<TrialOutcome>& outcomes) {
  OscillationReport rep;
  rep.trials = static_cast<int>(outcomes.size());
  for (const auto& o : outcomes) {
    const size_t n = o.touch_high.size();
    bool all = n > 0;
    for (size_t i = 0; i < n && all; ++i)
      all = o.touch_high[i] >= 1 && o.touch_low[i] >= 1;
    if (all) ++rep.all_vertices_both_bands;
  }
  if (rep.trials > 0)
    rep.fraction = static_cast<double>(rep.all_vertices_both_bands) / rep.trials;
  return rep;
}

}  // namespace sg
