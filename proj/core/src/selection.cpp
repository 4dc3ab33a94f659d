#include "sg/selection.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sg {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ index;
  std::uint64_t b = splitmix64(s);
  return RngStream(b);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RngStream::next_index(int n) {
  return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
}

double RngStream::next_uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

SelectionKind selection_kind_from_name(const std::string& name) {
  if (name == "uniform-neighbor") return SelectionKind::uniform_neighbor;
  if (name == "complete") return SelectionKind::complete;
  if (name == "ring-half") return SelectionKind::ring_half;
  if (name == "custom") return SelectionKind::custom;
  throw InputError("unknown selection kind: " + name);
}

std::string selection_kind_name(SelectionKind kind) {
  switch (kind) {
    case SelectionKind::uniform_neighbor: return "uniform-neighbor";
    case SelectionKind::complete: return "complete";
    case SelectionKind::ring_half: return "ring-half";
    case SelectionKind::custom: return "custom";
  }
  return "?";
}

SelectionModel::SelectionModel(const SignedGraph& g, std::vector<double> p)
    : n_(g.order()), p_(std::move(p)) {
  if (p_.size() != static_cast<size_t>(n_) * n_)
    throw InputError("selection matrix has wrong dimensions");
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) {
      double v = p_[static_cast<size_t>(i) * n_ + j];
      if (!(v >= 0.0))
        throw InputError("selection matrix entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is negative or non-finite");
      if (v > 0.0 && i != j && !g.has_edge(i, j))
        throw InputError("selection matrix puts mass on non-edge (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      row += v;
    }
    if (std::abs(row - 1.0) > 1e-12)
      throw InputError("selection matrix row " + std::to_string(i) +
                       " sums to " + std::to_string(row));
  }
}

SelectionModel SelectionModel::uniform_neighbor(const SignedGraph& g) {
  const int n = g.order();
  std::vector<double> p(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    int deg = g.degree(i);
    if (deg == 0)
      throw PreconditionError("uniform-neighbor selection: vertex " +
                              std::to_string(i) + " is isolated");
    for (int j : g.neighbors(i))
      p[static_cast<size_t>(i) * n + j] = 1.0 / deg;
  }
  return SelectionModel(g, std::move(p));
}

SelectionModel SelectionModel::complete(const SignedGraph& g) {
  const int n = g.order();
  if (static_cast<int>(g.edges().size()) != n * (n - 1) / 2)
    throw PreconditionError("complete selection requires a complete graph");
  std::vector<double> p(static_cast<size_t>(n) * n, 1.0 / (n - 1));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i) * n + i] = 0.0;
  return SelectionModel(g, std::move(p));
}

SelectionModel SelectionModel::ring_half(const SignedGraph& g) {
  const int n = g.order();
  if (static_cast<int>(g.edges().size()) != n || !g.connected())
    throw PreconditionError("ring-half selection requires a ring graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2)
      throw PreconditionError("ring-half selection requires a ring graph");
  std::vector<double> p(static_cast<size_t>(n) * n, 0.0);
  for (const auto& e : g.edges()) {
    p[static_cast<size_t>(e.u) * n + e.v] = 0.5;
    p[static_cast<size_t>(e.v) * n + e.u] = 0.5;
  }
  return SelectionModel(g, std::move(p));
}

SelectionModel SelectionModel::custom(const SignedGraph& g,
                                      std::vector<double> p) {
  return SelectionModel(g, std::move(p));
}

SelectionModel SelectionModel::make(SelectionKind kind, const SignedGraph& g) {
  switch (kind) {
    case SelectionKind::uniform_neighbor: return uniform_neighbor(g);
    case SelectionKind::complete: return complete(g);
    case SelectionKind::ring_half: return ring_half(g);
    case SelectionKind::custom:
      throw InputError("custom selection requires an explicit matrix");
  }
  throw InputError("unknown selection kind");
}

SelectionModel SelectionModel::custom_from_csv(const SignedGraph& g,
                                               const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open selection matrix: " + path);
  const int n = g.order();
  std::vector<double> p;
  p.reserve(static_cast<size_t>(n) * n);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    int cols = 0;
    while (std::getline(ss, cell, ',')) {
      p.push_back(std::stod(cell));
      ++cols;
    }
    if (cols != n)
      throw InputError("selection CSV row " + std::to_string(rows) + " has " +
                       std::to_string(cols) + " columns, expected " +
                       std::to_string(n));
    ++rows;
  }
  if (rows != n)
    throw InputError("selection CSV has " + std::to_string(rows) +
                     " rows, expected " + std::to_string(n));
  return SelectionModel(g, std::move(p));
}

double SelectionModel::pair_measure(int u, int v) const {
  return (p(u, v) + p(v, u)) / n_;
}

std::vector<EdgeTerm> SelectionModel::edge_terms(const SignedGraph& g) const {
  std::vector<EdgeTerm> terms;
  terms.reserve(g.edges().size());
  for (const auto& e : g.edges())
    terms.push_back(
        {e.u, e.v, pair_measure(e.u, e.v), e.sign == Sign::negative});
  return terms;
}

SelectionModel::Assumption2 SelectionModel::assumption2() const {
  bool diag = true;
  for (int i = 0; i < n_; ++i)
    if (p(i, i) < 0.5) {
      diag = false;
      break;
    }
  if (diag) return {true, "diagonal"};
  if (n_ >= 4) {
    bool doubly = true;
    for (int j = 0; j < n_ && doubly; ++j) {
      double col = 0.0;
      for (int i = 0; i < n_; ++i) col += p(i, j);
      if (std::abs(col - 1.0) > 1e-12) doubly = false;
    }
    if (doubly) return {true, "doubly-stochastic"};
  }
  return {false, "none"};
}

PairDraw sample_pair(const SelectionModel& model, RngStream& rng) {
  const int n = model.order();
  int i = rng.next_index(n);
  double r = rng.next_double();
  double acc = 0.0;
  int j = i;  // numerical slack falls through to a self draw
  for (int k = 0; k < n; ++k) {
    acc += model.p(i, k);
    if (r < acc) {
      j = k;
      break;
    }
  }
  return {i, j, i == j};
}

}  // namespace sg
