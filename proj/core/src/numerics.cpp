#include "sg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sg {

SymMatrix::SymMatrix(int n, std::vector<double> entries) : n_(n) {
  if (static_cast<size_t>(n) * n != entries.size())
    throw InputError("SymMatrix: entry count does not match dimension");
  double scale = 0.0;
  for (double x : entries) {
    if (!std::isfinite(x)) throw InputError("SymMatrix: non-finite entry");
    scale = std::max(scale, std::abs(x));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double a = entries[static_cast<size_t>(i) * n + j];
      double b = entries[static_cast<size_t>(j) * n + i];
      if (std::abs(a - b) > 1e-12 * std::max(1.0, scale))
        throw InputError("SymMatrix: asymmetry exceeds 1e-12");
      double m = 0.5 * (a + b);
      entries[static_cast<size_t>(i) * n + j] = m;
      entries[static_cast<size_t>(j) * n + i] = m;
    }
  a_ = std::move(entries);
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::averaging(int n) {
  SymMatrix m(n);
  const double v = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, v);
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  double d = 0.0;
  for (size_t i = 0; i < a_.size(); ++i)
    d = std::max(d, std::abs(a_[i] - other.a_[i]));
  return d;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

SymMatrix& SymMatrix::scale(double s) {
  for (double& x : a_) x *= s;
  return *this;
}

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double x = a[static_cast<size_t>(i) * n + j];
      s += 2.0 * x * x;
    }
  return std::sqrt(s);
}

EigenSym jacobi(const SymMatrix& m, bool want_vectors) {
  const int n = m.size();
  std::vector<double> a = m.data();
  for (double x : a)
    if (!std::isfinite(x)) throw InputError("eigen_sym: non-finite entry");
  std::vector<double> q;
  if (want_vectors) {
    q.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[static_cast<size_t>(i) * n + i] = 1.0;
  }
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  const double norm = m.frobenius_norm();
  const double target = 1e-11 * std::max(norm, 1e-300);
  const int max_sweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a, n) > target) {
    if (++sweep > max_sweeps)
      throw NumericalError("eigen_sym: Jacobi failed to converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double apr = at(p, r);
        if (std::abs(apr) <= 1e-3 * target / n) continue;
        double app = at(p, p), arr = at(r, r);
        double tau = (arr - app) / (2.0 * apr);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akr = at(k, r);
          at(k, p) = c * akp - s * akr;
          at(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), ark = at(r, k);
          at(p, k) = c * apk - s * ark;
          at(r, k) = s * apk + c * ark;
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            double qkp = q[static_cast<size_t>(k) * n + p];
            double qkr = q[static_cast<size_t>(k) * n + r];
            q[static_cast<size_t>(k) * n + p] = c * qkp - s * qkr;
            q[static_cast<size_t>(k) * n + r] = s * qkp + c * qkr;
          }
        }
      }
    }
  }
  EigenSym out;
  out.n = n;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = at(i, i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return diag[x] < diag[y]; });
  for (int j = 0; j < n; ++j) out.values[j] = diag[order[j]];
  if (want_vectors) {
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        out.vectors[static_cast<size_t>(i) * n + j] =
            q[static_cast<size_t>(i) * n + order[j]];
  }
  return out;
}

}  // namespace

EigenSym eigen_sym(const SymMatrix& m) { return jacobi(m, true); }

std::vector<double> eigenvalues_sym(const SymMatrix& m) {
  return jacobi(m, false).values;
}

void theta_apply(int n, const std::vector<EdgeTerm>& terms, double alpha,
                 double beta, const std::vector<double>& v,
                 std::vector<double>& out) {
  const size_t nn = static_cast<size_t>(n) * n;
  if (v.size() != nn) throw InputError("theta_apply: vector length != n^2");
  out.assign(nn, 0.0);
  // Work matrices, column-major vec convention: V(i,j) = v[j*n + i].
  std::vector<double> A(nn), rowsum(n), colsum(n), dV(n), Ad(n);
  for (const auto& e : terms) {
    const double gamma = e.negative ? beta : -alpha;
    // A = (W_e - U) V = V + gamma d (d'V) - (1/n) 1 (1'V)
    for (int j = 0; j < n; ++j) {
      double cs = 0.0;
      for (int i = 0; i < n; ++i) cs += v[static_cast<size_t>(j) * n + i];
      colsum[j] = cs / n;
      dV[j] = v[static_cast<size_t>(j) * n + e.u] -
              v[static_cast<size_t>(j) * n + e.v];
    }
    for (int j = 0; j < n; ++j) {
      const size_t base = static_cast<size_t>(j) * n;
      for (int i = 0; i < n; ++i) A[base + i] = v[base + i] - colsum[j];
      A[base + e.u] += gamma * dV[j];
      A[base + e.v] -= gamma * dV[j];
    }
    // B = A (W_e - U) = A + gamma (A d) d' - (1/n)(A 1) 1'
    for (int i = 0; i < n; ++i) {
      double rs = 0.0;
      for (int j = 0; j < n; ++j) rs += A[static_cast<size_t>(j) * n + i];
      rowsum[i] = rs / n;
      Ad[i] = A[static_cast<size_t>(e.u) * n + i] -
              A[static_cast<size_t>(e.v) * n + i];
    }
    for (int j = 0; j < n; ++j) {
      const size_t base = static_cast<size_t>(j) * n;
      double g = 0.0;
      if (j == e.u) g = gamma;
      if (j == e.v) g = -gamma;
      for (int i = 0; i < n; ++i)
        out[base + i] += e.weight * (A[base + i] + g * Ad[i] - rowsum[i]);
    }
  }
}

PowerResult restricted_spectral_radius(const LinearOp& apply,
                                       std::vector<double> seed, double tol,
                                       long max_iter) {
  double norm = std::sqrt(
      std::inner_product(seed.begin(), seed.end(), seed.begin(), 0.0));
  if (!(norm > 0.0)) throw PreconditionError("power iteration: zero seed");
  for (double& x : seed) x /= norm;
  std::vector<double> w(seed.size());
  PowerResult res;
  double prev = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= max_iter; ++it) {
    apply(seed, w);
    double rayleigh =
        std::inner_product(seed.begin(), seed.end(), w.begin(), 0.0);
    // Theta is an average of symmetric PSD Kronecker squares.
    if (rayleigh < -1e-12)
      throw NumericalError("power iteration: negative Rayleigh quotient on a "
                           "PSD operator");
    double wnorm =
        std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
    res.iterations = it;
    if (wnorm <= 1e-300) {
      // Seed is annihilated: restricted spectrum is {0}.
      res.value = 0.0;
      res.converged = true;
      return res;
    }
    res.value = rayleigh;
    if (std::abs(rayleigh - prev) < tol) {
      res.converged = true;
      return res;
    }
    prev = rayleigh;
    for (size_t i = 0; i < w.size(); ++i) seed[i] = w[i] / wnorm;
  }
  res.converged = false;
  return res;
}

double bisect_threshold(const std::function<double(double)>& h, double lo,
                        double hi, double tol) {
  double flo = h(lo);
  if (flo > 0.0)
    throw NumericalError("bisect_threshold: h(lo) > 0, no bracket");
  const double hi_cap = std::ldexp(1.0, 60);
  while (h(hi) < 0.0) {
    hi *= 2.0;
    if (hi > hi_cap)
      throw NumericalError("bisect_threshold: no finite threshold in range");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sg
