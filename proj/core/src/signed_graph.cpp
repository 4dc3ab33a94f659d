#include "sg/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <sstream>

namespace sg {

namespace {

std::vector<std::vector<int>> components_over(
    int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  // Scanning vertices in order already yields components keyed by their
  // smallest vertex, members ascending.
  return out;
}

}  // namespace

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 3) throw InputError("signed graph requires n >= 3");
  for (auto& e : edges) {
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range [0," +
                       std::to_string(n) + ")");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
      throw InputError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                       std::to_string(edges[i].v) + ")");
  }
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<Sign> SignedGraph::edge_sign(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::make_pair(u, v),
      [](const Edge& e, const std::pair<int, int>& p) {
        return std::tie(e.u, e.v) < std::tie(p.first, p.second);
      });
  if (it != edges_.end() && it->u == u && it->v == v) return it->sign;
  return std::nullopt;
}

int SignedGraph::degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

const std::vector<int>& SignedGraph::neighbors(int v) const { return adj_.at(v); }

std::vector<Edge> SignedGraph::positive_edges() const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.sign == Sign::positive) out.push_back(e);
  return out;
}

std::vector<Edge> SignedGraph::negative_edges() const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.sign == Sign::negative) out.push_back(e);
  return out;
}

bool SignedGraph::connected() const {
  return components_over(n_, adj_).size() == 1;
}

bool SignedGraph::has_negative_edge() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign == Sign::negative; });
}

bool SignedGraph::positive_connected() const {
  return positive_components(*this).size() == 1;
}

SignedGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_content_line(header)) throw InputError("empty graph file");
  int n = 0, m = 0;
  {
    std::istringstream ss(header);
    if (!(ss >> n >> m) || n <= 0 || m < 0)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected header 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string row;
    if (!next_content_line(row))
      throw InputError("unexpected end of file: expected " +
                       std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream ss(row);
    int u, v;
    std::string s;
    if (!(ss >> u >> v >> s) || (s != "+" && s != "-"))
      throw InputError("line " + std::to_string(lineno) +
                       ": expected 'u v s' with s in {+,-}");
    edges.push_back({u, v, s == "+" ? Sign::positive : Sign::negative});
  }
  try {
    return SignedGraph(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("graph file invalid: ") + e.what());
  }
}

SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(const SignedGraph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edges().size() << '\n';
  for (const auto& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::positive ? '+' : '-')
        << '\n';
}

void save_graph(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file: " + path);
  write_graph(g, out);
}

std::vector<std::vector<int>> positive_components(const SignedGraph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (const auto& e : g.edges()) {
    if (e.sign == Sign::positive) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  return components_over(g.order(), adj);
}

namespace {

// BFS tree walk shared by both balance witnesses. parent[v] = predecessor,
// depth from root, restricted to edges accepted by `admit`.
struct BfsTree {
  std::vector<int> parent;
  std::vector<int> depth;
};

std::vector<int> tree_cycle(const BfsTree& t, int u, int v) {
  // Cycle through tree paths of u and v up to their meeting point, plus the
  // (u,v) edge closing it.
  std::vector<int> pu{u}, pv{v};
  int a = u, b = v;
  while (t.depth[a] > t.depth[b]) pu.push_back(a = t.parent[a]);
  while (t.depth[b] > t.depth[a]) pv.push_back(b = t.parent[b]);
  while (a != b) {
    pu.push_back(a = t.parent[a]);
    pv.push_back(b = t.parent[b]);
  }
  // pu ends at the common ancestor; append pv reversed, dropping its copy.
  std::vector<int> cycle(pu.begin(), pu.end());
  for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
  return cycle;
}

}  // namespace

StrongBalance check_strong_balance(const SignedGraph& g) {
  if (!g.connected())
    throw PreconditionError("strong balance requires a connected graph");
  const int n = g.order();
  std::vector<int> color(n, -1);
  BfsTree t{std::vector<int>(n, -1), std::vector<int>(n, 0)};
  color[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      int want = color[v] ^ (g.edge_sign(v, w) == Sign::negative ? 1 : 0);
      if (color[w] < 0) {
        color[w] = want;
        t.parent[w] = v;
        t.depth[w] = t.depth[v] + 1;
        q.push(w);
      } else if (color[w] != want) {
        StrongBalance out;
        out.witness_cycle = tree_cycle(t, v, w);
        return out;
      }
    }
  }
  StrongBalance out;
  std::array<std::vector<int>, 2> part;
  for (int v = 0; v < n; ++v) part[color[v]].push_back(v);
  out.partition = std::move(part);
  return out;
}

WeakBalance check_weak_balance(const SignedGraph& g) {
  if (!g.connected())
    throw PreconditionError("weak balance requires a connected graph");
  auto comps = positive_components(g);
  std::vector<int> comp_of(g.order());
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  for (const auto& e : g.negative_edges()) {
    if (comp_of[e.u] != comp_of[e.v]) continue;
    // Positive path from e.u to e.v plus the negative edge: a cycle with
    // exactly one negative edge.
    const int n = g.order();
    BfsTree t{std::vector<int>(n, -1), std::vector<int>(n, 0)};
    std::vector<char> seen(n, 0);
    seen[e.u] = 1;
    std::queue<int> q;
    q.push(e.u);
    while (!q.empty() && !seen[e.v]) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (g.edge_sign(v, w) != Sign::positive || seen[w]) continue;
        seen[w] = 1;
        t.parent[w] = v;
        q.push(w);
      }
    }
    std::vector<int> path;
    for (int v = e.v; v != -1; v = t.parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // e.u ... e.v
    WeakBalance out;
    out.witness_cycle = std::move(path);
    return out;
  }
  WeakBalance out;
  out.partition = std::move(comps);
  return out;
}

BalanceVerdict check_balance(const SignedGraph& g) {
  return {check_strong_balance(g), check_weak_balance(g)};
}

namespace {

bool match_rec(int n, const std::vector<std::uint32_t>& adj,
               std::uint32_t matched, std::vector<std::pair<int, int>>& picks,
               std::vector<char>& dead) {
  if (matched == (n >= 32 ? ~0u : ((1u << n) - 1))) return true;
  if (dead[matched]) return false;
  int v = 0;
  while (matched & (1u << v)) ++v;
  std::uint32_t cands = adj[v] & ~matched;
  while (cands) {
    int w = std::countr_zero(cands);
    cands &= cands - 1;
    picks.emplace_back(v, w);
    if (match_rec(n, adj, matched | (1u << v) | (1u << w), picks, dead))
      return true;
    picks.pop_back();
  }
  dead[matched] = 1;
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_perfect_matching(
    const SignedGraph& g, bool restrict_to_positive) {
  const int n = g.order();
  if (n > kMatchingSizeBound)
    throw PreconditionError("perfect matching search supports n <= " +
                            std::to_string(kMatchingSizeBound));
  if (n % 2 != 0) return std::nullopt;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    if (restrict_to_positive && e.sign != Sign::positive) continue;
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<std::pair<int, int>> picks;
  std::vector<char> dead(1u << n, 0);
  if (match_rec(n, adj, 0, picks, dead)) return picks;
  return std::nullopt;
}

}  // namespace sg
