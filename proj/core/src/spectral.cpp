#include "sg/spectral.hpp"

#include <cmath>
#include <sstream>

namespace sg {

SpectralModel::SpectralModel(const SignedGraph& g, const SelectionModel& sel)
    : n_(g.order()),
      l_pos_(g.order()),
      l_neg_(g.order()),
      terms_(sel.edge_terms(g)),
      pos_connected_(g.positive_connected()),
      assumption2_(sel.assumption2()) {
  if (sel.order() != n_)
    throw InputError("selection model does not match graph order");
  for (const auto& t : terms_) {
    SymMatrix& l = t.negative ? l_neg_ : l_pos_;
    l.add(t.u, t.u, t.weight);
    l.add(t.v, t.v, t.weight);
    l.add(t.u, t.v, -t.weight);
  }
}

SymMatrix SpectralModel::expected_w(double alpha, double beta) const {
  SymMatrix w = SymMatrix::identity(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      w.set(i, j, w(i, j) - alpha * l_pos_(i, j) + beta * l_neg_(i, j));
  // Rows of E{W} sum to one; both Laplacians have zero row sums.
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += w(i, j);
    if (std::abs(row - 1.0) > 1e-9)
      throw NumericalError("expected_w: row sum drifted from 1");
  }
  return w;
}

SymMatrix SpectralModel::expected_w_sq(double alpha, double beta) const {
  SymMatrix w = SymMatrix::identity(n_);
  const double ca = 2.0 * alpha * (1.0 - alpha);
  const double cb = 2.0 * beta * (1.0 + beta);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      w.set(i, j, w(i, j) - ca * l_pos_(i, j) + cb * l_neg_(i, j));
  return w;
}

namespace {

SymMatrix minus_averaging(SymMatrix m) {
  const int n = m.size();
  const double u = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, m(i, j) - u);
  return m;
}

}  // namespace

double SpectralModel::f_value(double alpha, double beta) const {
  auto vals = eigenvalues_sym(minus_averaging(expected_w(alpha, beta)));
  return vals.back();
}

double SpectralModel::beta_star(double alpha, double tol) const {
  if (!pos_connected_)
    throw PreconditionError(
        "beta_star requires a connected positive subgraph");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw PreconditionError("beta_star requires alpha in (0, 1]");
  auto h = [&](double beta) { return f_value(alpha, beta) - 1.0; };
  return bisect_threshold(h, 0.0, 1.0, tol);
}

SpectralModel::MsBounds SpectralModel::mean_square_bounds(double alpha,
                                                          double beta) const {
  auto vals = eigenvalues_sym(minus_averaging(expected_w_sq(alpha, beta)));
  MsBounds b;
  b.conv_bound = vals.back();
  b.min_bound = vals.front();
  b.mean_f = f_value(alpha, beta);
  if (b.conv_bound < 1.0)
    b.verdict = "converge";
  else if (b.mean_f > 1.0 || b.min_bound > 1.0)
    b.verdict = "diverge";
  else
    b.verdict = "indeterminate-by-bounds";
  return b;
}

double SpectralModel::lambda2_pos() const {
  auto vals = eigenvalues_sym(l_pos_);
  return vals.size() > 1 ? vals[1] : 0.0;
}

double SpectralModel::lambda_max_neg() const {
  return eigenvalues_sym(l_neg_).back();
}

double SpectralModel::beta_natural(double alpha) const {
  if (!pos_connected_) return 0.0;
  double lmax = lambda_max_neg();
  if (lmax <= 0.0)
    throw PreconditionError("beta_natural requires a nonempty negative graph");
  double r = lambda2_pos() / lmax;
  double q = r * alpha * (1.0 - alpha);
  return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * q));
}

SpectralModel::LambdaStar SpectralModel::lambda_star(double alpha, double beta,
                                                     double tol,
                                                     long max_iter) const {
  const int n = n_;
  std::vector<double> seed(static_cast<size_t>(n) * n, -1.0 / n);
  for (int i = 0; i < n; ++i)
    seed[static_cast<size_t>(i) * n + i] += 1.0;  // vec(I - U)
  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    theta_apply(n, terms_, alpha, beta, v, out);
  };
  PowerResult pr = restricted_spectral_radius(apply, std::move(seed), tol,
                                              max_iter);
  return {pr.value, pr.converged, pr.iterations};
}

double er_threshold(double alpha, double beta) {
  if (!(alpha + beta > 0.0))
    throw PreconditionError("er_threshold requires alpha + beta > 0");
  return alpha / (alpha + beta);
}

AnalysisReport analyze(const SpectralModel& model, double alpha, double beta) {
  AnalysisReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.f = model.f_value(alpha, beta);
  r.mean_verdict = r.f < 1.0 ? "converge-in-expectation"
                 : r.f > 1.0 ? "diverge-in-expectation"
                             : "critical";
  if (model.positive_connected() && alpha > 0.0) {
    r.beta_star = model.beta_star(alpha);
    r.beta_natural = model.beta_natural(alpha);
  }
  auto ms = model.mean_square_bounds(alpha, beta);
  r.ms_conv_bound = ms.conv_bound;
  r.ms_min_bound = ms.min_bound;
  r.mean_square_verdict = ms.verdict;
  auto ls = model.lambda_star(alpha, beta);
  r.lambda_star = ls.value;
  r.lambda_star_converged = ls.converged;
  if (!ls.converged)
    r.lambda_star_verdict = "power-iteration-not-converged";
  else
    r.lambda_star_verdict = ls.value < 1.0 ? "converge-in-mean-square"
                          : ls.value > 1.0 ? "diverge-in-mean-square"
                                           : "critical";
  auto a2 = model.assumption2();
  r.assumption2_holds = a2.holds;
  r.assumption2_branch = a2.branch;
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  std::ostringstream os;
  os.precision(15);
  auto opt = [&](double v) -> std::string {
    if (v < 0.0) return "null";
    std::ostringstream t;
    t.precision(15);
    t << v;
    return t.str();
  };
  os << "{\n"
     << "  \"alpha\": " << r.alpha << ",\n"
     << "  \"beta\": " << r.beta << ",\n"
     << "  \"f\": " << r.f << ",\n"
     << "  \"beta_star\": " << opt(r.beta_star) << ",\n"
     << "  \"beta_natural\": " << opt(r.beta_natural) << ",\n"
     << "  \"ms_bounds\": [" << r.ms_conv_bound << ", " << r.f << ", "
     << r.ms_min_bound << "],\n"
     << "  \"lambda_star\": " << r.lambda_star << ",\n"
     << "  \"verdicts\": {\n"
     << "    \"mean\": \"" << r.mean_verdict << "\",\n"
     << "    \"mean_square\": \"" << r.mean_square_verdict << "\",\n"
     << "    \"lambda_star\": \"" << r.lambda_star_verdict << "\"\n"
     << "  },\n"
     << "  \"assumption2\": {\"holds\": "
     << (r.assumption2_holds ? "true" : "false") << ", \"branch\": \""
     << r.assumption2_branch << "\"}\n"
     << "}\n";
  return os.str();
}

}  // namespace sg
