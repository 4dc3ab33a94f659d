#include "sg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace sg {

Rule rule_from_name(const std::string& name) {
  if (name == "symmetric") return Rule::symmetric;
  if (name == "asymmetric-constrained") return Rule::asymmetric_constrained;
  if (name == "altafini") return Rule::altafini;
  throw InputError("unknown rule: " + name);
}

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::symmetric: return "symmetric";
    case Rule::asymmetric_constrained: return "asymmetric-constrained";
    case Rule::altafini: return "altafini";
  }
  return "?";
}

void UpdateParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InputError("alpha must lie in [0,1]");
  if (!(beta >= 0.0)) throw InputError("beta must be >= 0");
  if (rule == Rule::altafini && !(beta > 0.0 && beta < 1.0))
    throw InputError("altafini rule requires beta in (0,1)");
  if (rule == Rule::asymmetric_constrained) {
    if (!(a >= 0.0 && b >= 0.0 && c >= 0.0 &&
          std::abs(a + b + c - 1.0) <= 1e-12))
      throw InputError("asymmetric probabilities must satisfy a+b+c = 1");
    if (!(bound > 0.0) || !std::isfinite(bound))
      throw InputError("asymmetric-constrained rule requires finite A > 0");
  }
}

void step_symmetric(std::vector<double>& x, int i, int j, Sign sign,
                    const UpdateParams& p) {
  const double xi = x[i], xj = x[j];
  if (sign == Sign::positive) {
    x[i] = (1.0 - p.alpha) * xi + p.alpha * xj;
    x[j] = (1.0 - p.alpha) * xj + p.alpha * xi;
  } else {
    x[i] = (1.0 + p.beta) * xi - p.beta * xj;
    x[j] = (1.0 + p.beta) * xj - p.beta * xi;
  }
}

namespace {

double clamp_box(double z, double A) { return std::clamp(z, -A, A); }

}  // namespace

void step_asymmetric_constrained(std::vector<double>& x, int i, int j,
                                 Sign sign, const UpdateParams& p,
                                 RngStream& rng) {
  const double theta = sign == Sign::positive ? p.alpha : -p.beta;
  const double xi = x[i], xj = x[j];
  const double r = rng.next_double();
  if (r < p.a) {
    x[i] = clamp_box((1.0 - theta) * xi + theta * xj, p.bound);
  } else if (r < p.a + p.b) {
    x[j] = clamp_box((1.0 - theta) * xj + theta * xi, p.bound);
  } else {
    x[i] = clamp_box((1.0 - theta) * xi + theta * xj, p.bound);
    x[j] = clamp_box((1.0 - theta) * xj + theta * xi, p.bound);
  }
}

void step_altafini(std::vector<double>& x, int i, int j, Sign sign,
                   const UpdateParams& p) {
  if (!(p.beta > 0.0 && p.beta < 1.0))
    throw PreconditionError("altafini step requires beta in (0,1)");
  const double xi = x[i], xj = x[j];
  if (sign == Sign::positive) {
    x[i] = (1.0 - p.alpha) * xi + p.alpha * xj;
    x[j] = (1.0 - p.alpha) * xj + p.alpha * xi;
  } else {
    x[i] = (1.0 - p.beta) * xi - p.beta * xj;
    x[j] = (1.0 - p.beta) * xj - p.beta * xi;
  }
}

double spread_of(const std::vector<double>& x) {
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

TrajectoryStats simulate(const SignedGraph& g, const SelectionModel& sel,
                         const UpdateParams& params, std::vector<double> x0,
                         const SimulateOptions& opt, RngStream& rng) {
  params.validate();
  const int n = g.order();
  if (static_cast<int>(x0.size()) != n)
    throw InputError("x0 length does not match graph order");
  if (sel.order() != n)
    throw InputError("selection model does not match graph order");

  double m_div = opt.m_div;
  if (m_div < 0.0) {
    double xinf = 0.0;
    for (double v : x0) xinf = std::max(xinf, std::abs(v));
    m_div = 1e6 * std::max(1.0, xinf);
  }

  TrajectoryStats st;
  st.touch_high.assign(n, 0);
  st.touch_low.assign(n, 0);
  if (opt.track_pairs) st.pair_max.assign(static_cast<size_t>(n) * n, 0.0);
  const double delta_touch = 0.05 * params.bound;

  std::vector<double>& x = x0;
  auto update_trackers = [&] {
    if (opt.track_pairs) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double d = std::abs(x[i] - x[j]);
          auto& m = st.pair_max[static_cast<size_t>(i) * n + j];
          if (d > m) m = d;
        }
    }
    if (params.rule == Rule::asymmetric_constrained) {
      for (int i = 0; i < n; ++i) {
        if (x[i] >= params.bound - delta_touch) ++st.touch_high[i];
        if (x[i] <= -params.bound + delta_touch) ++st.touch_low[i];
      }
    }
  };
  auto record = [&](long long k, double spread) {
    TrajectoryRecord r{k, spread, {}};
    if (opt.snapshots) r.x = x;
    st.records.push_back(std::move(r));
  };

  double spread = spread_of(x);
  update_trackers();
  record(0, spread);
  if (opt.eps_conv >= 0.0 && spread < opt.eps_conv) {
    st.stop = StopReason::converged;
    st.stop_k = 0;
  }

  long long k = 0;
  while (st.stop == StopReason::none && k < opt.horizon) {
    PairDraw d = sample_pair(sel, rng);
    ++k;
    if (!d.self) {
      Sign sign = *g.edge_sign(d.i, d.j);
      switch (params.rule) {
        case Rule::symmetric:
          step_symmetric(x, d.i, d.j, sign, params);
          break;
        case Rule::asymmetric_constrained:
          step_asymmetric_constrained(x, d.i, d.j, sign, params, rng);
          break;
        case Rule::altafini:
          step_altafini(x, d.i, d.j, sign, params);
          break;
      }
    }
    spread = spread_of(x);
    update_trackers();
    if (opt.eps_conv >= 0.0 && spread < opt.eps_conv) {
      st.stop = StopReason::converged;
      st.stop_k = k;
    } else if (spread > m_div) {
      st.stop = StopReason::diverged;
      st.stop_k = k;
    }
    if (opt.record_every > 0 && k % opt.record_every == 0 &&
        st.stop == StopReason::none)
      record(k, spread);
  }

  if (st.records.back().k != k) record(k, spread);  // final row always present
  st.events = k;
  st.final_spread = spread;
  st.final_x = x;
  return st;
}

void write_trajectory_csv(const TrajectoryStats& stats, int n,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write trajectory CSV: " + path);
  const bool snaps = !stats.records.empty() && !stats.records.front().x.empty();
  out << "k,spread";
  if (snaps)
    for (int i = 0; i < n; ++i) out << ",x" << i;
  out << '\n';
  out.precision(17);
  for (const auto& r : stats.records) {
    out << r.k << ',' << r.spread;
    if (snaps)
      for (double v : r.x) out << ',' << v;
    out << '\n';
  }
}

}  // namespace sg
