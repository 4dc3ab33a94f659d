#pragma once

#include <functional>
#include <vector>

#include "sg/errors.hpp"

namespace sg {

/// Dense symmetric matrix, row-major. Construction symmetrizes by averaging
/// with the transpose and rejects asymmetry beyond 1e-12 (relative).
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}
  SymMatrix(int n, std::vector<double> entries);

  static SymMatrix identity(int n);
  /// The averaging projector U = 11'/n.
  static SymMatrix averaging(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }
  void add(int i, int j, double v) {
    a_[idx(i, j)] += v;
    if (i != j) a_[idx(j, i)] += v;
  }
  const std::vector<double>& data() const { return a_; }

  double trace() const;
  double frobenius_norm() const;
  double max_abs_diff(const SymMatrix& other) const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& scale(double s);

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
  int n_;
  std::vector<double> a_;
};

struct EigenSym {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column j = eigenvector j
  int n = 0;

  double vector_at(int i, int j) const {
    return vectors[static_cast<size_t>(i) * n + j];
  }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-11 * ||m||_F. Throws NumericalError if that never happens.
EigenSym eigen_sym(const SymMatrix& m);
/// Eigenvalues only (ascending); skips accumulating rotations.
std::vector<double> eigenvalues_sym(const SymMatrix& m);

/// One weighted signed edge of the averaged selection measure: weight is
/// mu({u,v}) = (p_uv + p_vu) / n.
struct EdgeTerm {
  int u;
  int v;
  double weight;
  bool negative;
};

/// Applies Theta = sum_e mu(e) (W_e - U) kron (W_e - U) to a vectorized n x n
/// matrix without materializing the n^2 x n^2 operator. W_e = I - alpha dd'
/// on positive edges and I + beta dd' on negative ones, d = e_u - e_v.
/// v and out have length n^2 (column-major vec).
void theta_apply(int n, const std::vector<EdgeTerm>& terms, double alpha,
                 double beta, const std::vector<double>& v,
                 std::vector<double>& out);

struct PowerResult {
  double value = 0.0;
  bool converged = false;
  long iterations = 0;
};

using LinearOp =
    std::function<void(const std::vector<double>&, std::vector<double>&)>;

/// Power iteration started exactly at `seed`; reports the Rayleigh quotient
/// once successive estimates differ by < tol, or flags non-convergence after
/// max_iter steps. This is the spectral radius of the (PSD) operator
/// restricted to span{Theta^k seed}.
PowerResult restricted_spectral_radius(const LinearOp& apply,
                                       std::vector<double> seed,
                                       double tol = 1e-10,
                                       long max_iter = 100000);

/// Root of a nondecreasing h on [lo, hi]; hi is doubled (up to 2^60) until it
/// brackets the root. Throws NumericalError on bracket failure.
double bisect_threshold(const std::function<double(double)>& h, double lo,
                        double hi, double tol = 1e-8);

}  // namespace sg
