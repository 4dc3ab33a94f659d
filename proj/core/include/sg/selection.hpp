#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sg/numerics.hpp"
#include "sg/signed_graph.hpp"

namespace sg {

/// Counter-based deterministic generator (splitmix64). Identical seeds give
/// identical draw sequences on every platform; per-trial substreams are
/// derived by hashing (seed, index) so trials can run in any order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}
  static RngStream substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();
  /// Uniform in {0, ..., n-1}.
  int next_index(int n);
  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

enum class SelectionKind { uniform_neighbor, complete, ring_half, custom };

SelectionKind selection_kind_from_name(const std::string& name);
std::string selection_kind_name(SelectionKind kind);

/// The i.i.d. pair selection process: a row-stochastic matrix P complying
/// with the graph (p_ij > 0, i != j, only on edges), and the induced pair
/// measure mu({i,j}) = (p_ij + p_ji)/n.
class SelectionModel {
 public:
  static SelectionModel uniform_neighbor(const SignedGraph& g);
  /// P = (11' - I)/(n-1); requires a complete graph.
  static SelectionModel complete(const SignedGraph& g);
  /// P = A(R_n)/2; requires a ring.
  static SelectionModel ring_half(const SignedGraph& g);
  static SelectionModel custom(const SignedGraph& g, std::vector<double> p);
  static SelectionModel make(SelectionKind kind, const SignedGraph& g);
  /// CSV: n rows of n comma-separated reals.
  static SelectionModel custom_from_csv(const SignedGraph& g,
                                        const std::string& path);

  int order() const { return n_; }
  double p(int i, int j) const { return p_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& matrix() const { return p_; }
  /// mu({u,v}) = (p_uv + p_vu)/n; zero off the edge set.
  double pair_measure(int u, int v) const;
  /// One weighted term per edge of the host graph (zero-measure edges kept).
  std::vector<EdgeTerm> edge_terms(const SignedGraph& g) const;

  struct Assumption2 {
    bool holds = false;
    /// "diagonal" (p_ii >= 1/2 for all i), "doubly-stochastic", or "none".
    std::string branch = "none";
  };
  Assumption2 assumption2() const;

 private:
  SelectionModel(const SignedGraph& g, std::vector<double> p);
  int n_;
  std::vector<double> p_;
};

/// One selection event: initiator i drawn uniformly, j ~ row i of P.
/// self is true when j == i (diagonal mass): a no-op event.
struct PairDraw {
  int i;
  int j;
  bool self;
};

PairDraw sample_pair(const SelectionModel& model, RngStream& rng);

}  // namespace sg
