#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/errors.hpp"

namespace sg {

enum class Sign { positive, negative };

/// Undirected signed edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected signed graph on vertices 0..n-1. Edges are kept in canonical
/// order (sorted lexicographically, endpoints normalized to u < v). No
/// self-loops or duplicate pairs. Connectivity and a nonempty negative edge
/// set are NOT enforced here; analyses that need them check explicitly.
class SignedGraph {
 public:
  SignedGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<Sign> edge_sign(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_sign(u, v).has_value(); }

  int degree(int v) const;
  /// Neighbors of v over all edges, ascending.
  const std::vector<int>& neighbors(int v) const;

  std::vector<Edge> positive_edges() const;
  std::vector<Edge> negative_edges() const;

  bool connected() const;
  bool has_negative_edge() const;
  bool positive_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Text format: "n m" then m lines "u v s", s in {+,-}; '#' comments ignored.
SignedGraph load_graph(const std::string& path);
SignedGraph read_graph(std::istream& in);
/// Canonical writer; load_graph(save_graph(g)) is bit-exact.
void save_graph(const SignedGraph& g, const std::string& path);
void write_graph(const SignedGraph& g, std::ostream& out);

/// Connected components of the positive subgraph, each sorted ascending,
/// components ordered by smallest contained vertex.
std::vector<std::vector<int>> positive_components(const SignedGraph& g);

struct StrongBalance {
  /// Engaged iff strongly balanced; [0] contains vertex 0's side.
  std::optional<std::array<std::vector<int>, 2>> partition;
  /// On failure: a cycle (vertex list) with an odd number of negative edges.
  std::vector<int> witness_cycle;
};

struct WeakBalance {
  /// Engaged iff weakly balanced; the positive-component partition.
  std::optional<std::vector<std::vector<int>>> partition;
  /// On failure: a cycle with exactly one negative edge.
  std::vector<int> witness_cycle;
};

struct BalanceVerdict {
  StrongBalance strong;
  WeakBalance weak;
};

/// Signed two-coloring over a BFS tree; requires g connected.
StrongBalance check_strong_balance(const SignedGraph& g);
/// Weakly balanced iff no negative edge joins two vertices of the same
/// positive component; requires g connected.
WeakBalance check_weak_balance(const SignedGraph& g);
BalanceVerdict check_balance(const SignedGraph& g);

/// Exact bitmask backtracking; n must be <= kMatchingSizeBound.
/// Engaged result is a set of n/2 disjoint edges covering all vertices.
inline constexpr int kMatchingSizeBound = 24;
std::optional<std::vector<std::pair<int, int>>> find_perfect_matching(
    const SignedGraph& g, bool restrict_to_positive);

}  // namespace sg
