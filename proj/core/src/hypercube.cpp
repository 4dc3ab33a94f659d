#include "sg/hypercube.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sg {

namespace {

void build_schedule(int m, std::vector<std::pair<int, int>>& pairs) {
  if (m == 1) {
    pairs.emplace_back(0, 1);
    return;
  }
  std::vector<std::pair<int, int>> half;
  build_schedule(m - 1, half);
  const int shift = 1 << (m - 1);
  for (auto [a, b] : half) pairs.emplace_back(a, b);
  for (auto [a, b] : half) pairs.emplace_back(a + shift, b + shift);
  for (int c = 0; c < shift; ++c) pairs.emplace_back(c, c + shift);
}

}  // namespace

PairSchedule hypercube_schedule(int m) {
  if (m < 1) throw InputError("hypercube dimension must be >= 1");
  PairSchedule s;
  s.n = 1 << m;
  build_schedule(m, s.pairs);
  return s;
}

PairSchedule hypercube_schedule(int m, const std::vector<int>& labeling) {
  PairSchedule s = hypercube_schedule(m);
  if (static_cast<int>(labeling.size()) != s.n)
    throw InputError("labeling size must be 2^m");
  std::vector<char> seen(s.n, 0);
  for (int v : labeling) {
    if (v < 0 || v >= s.n || seen[v])
      throw InputError("labeling is not a bijection onto [0, 2^m)");
    seen[v] = 1;
  }
  for (auto& [a, b] : s.pairs) {
    a = labeling[a];
    b = labeling[b];
  }
  return s;
}

ScheduleVerification verify_schedule(const PairSchedule& schedule, int n,
                                     double alpha) {
  // prod = W+_{i_T j_T} ... W+_{i_1 j_1}, applied left-multiplicatively.
  std::vector<double> prod(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) prod[static_cast<size_t>(i) * n + i] = 1.0;
  for (auto [u, v] : schedule.pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw InputError("schedule pair out of range");
    // Rows u and v of prod are mixed: W+ = I - alpha dd'.
    for (int j = 0; j < n; ++j) {
      double ru = prod[static_cast<size_t>(u) * n + j];
      double rv = prod[static_cast<size_t>(v) * n + j];
      prod[static_cast<size_t>(u) * n + j] = (1.0 - alpha) * ru + alpha * rv;
      prod[static_cast<size_t>(v) * n + j] = (1.0 - alpha) * rv + alpha * ru;
    }
  }
  double residual = 0.0;
  for (size_t i = 0; i < prod.size(); ++i)
    residual = std::max(residual, std::abs(prod[i] - 1.0 / n));
  return {residual <= 1e-12, residual};
}

FiniteTimeChecks finite_time_necessary_checks(const SignedGraph& g,
                                              double alpha) {
  FiniteTimeChecks c;
  c.alpha_is_half = alpha == 0.5;
  const int n = g.order();
  c.power_of_two = (n & (n - 1)) == 0;
  c.matching = find_perfect_matching(g, /*restrict_to_positive=*/true);
  c.has_matching = c.matching.has_value();
  c.all_hold = c.alpha_is_half && c.power_of_two && c.has_matching;
  return c;
}

namespace {

bool embed(const SignedGraph& g, int m, std::vector<int>& labeling,
           std::vector<char>& used, int code) {
  const int total = 1 << m;
  if (code == total) return true;
  for (int v = 0; v < g.order(); ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (int bit = 0; bit < m && ok; ++bit) {
      int prev = code ^ (1 << bit);
      if (prev >= code) continue;  // only check already-assigned neighbors
      int w = labeling[prev];
      ok = g.edge_sign(v, w) == Sign::positive;
    }
    if (!ok) continue;
    labeling[code] = v;
    used[v] = 1;
    if (embed(g, m, labeling, used, code + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_hypercube_labeling(const SignedGraph& g,
                                                        int m) {
  if (m < 1 || m > kHypercubeSearchBound)
    throw PreconditionError(
        "hypercube embedding search supports 1 <= m <= " +
        std::to_string(kHypercubeSearchBound) +
        "; supply an explicit labeling for larger cubes");
  if (g.order() != (1 << m))
    throw PreconditionError("graph order must equal 2^m");
  std::vector<int> labeling(1 << m, -1);
  std::vector<char> used(g.order(), 0);
  if (embed(g, m, labeling, used, 0)) return labeling;
  return std::nullopt;
}

void check_schedule_edges(const SignedGraph& g, const PairSchedule& schedule) {
  for (auto [u, v] : schedule.pairs)
    if (g.edge_sign(u, v) != Sign::positive)
      throw InputError("schedule pair (" + std::to_string(u) + "," +
                       std::to_string(v) +
                       ") is not a positive edge of the host graph");
}

PairSchedule load_schedule(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open schedule file: " + path);
  PairSchedule s;
  s.n = n;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    int u, v;
    if (!(ss >> u >> v) || u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("schedule line " + std::to_string(lineno) +
                       ": expected a vertex pair 'i j' in [0," +
                       std::to_string(n) + ")");
    s.pairs.emplace_back(u, v);
  }
  return s;
}

void save_schedule(const PairSchedule& schedule, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write schedule file: " + path);
  for (auto [u, v] : schedule.pairs) out << u << ' ' << v << '\n';
}

std::vector<double> apply_schedule(const PairSchedule& schedule,
                                   std::vector<double> x, double alpha) {
  for (auto [u, v] : schedule.pairs) {
    double xu = x.at(u), xv = x.at(v);
    x[u] = (1.0 - alpha) * xu + alpha * xv;
    x[v] = (1.0 - alpha) * xv + alpha * xu;
  }
  return x;
}

}  // namespace sg
