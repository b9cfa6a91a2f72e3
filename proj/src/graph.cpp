#include "arp/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace arp {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 1 || n > 64) throw std::invalid_argument("Graph: need 1 <= n <= 64");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return adj_[u] >> v & 1;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph: loop edge");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph: endpoint out of range");
  if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge");
  Edge e(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  adj_[u] |= 1ULL << v;
  adj_[v] |= 1ULL << u;
}

BipartiteGraph::BipartiteGraph(int ell, std::vector<std::pair<int, int>> edges)
    : ell_(ell), edges_(std::move(edges)), adj_(ell, 0) {
  if (ell < 1 || ell > 32)
    throw std::invalid_argument("BipartiteGraph: need 1 <= ell <= 32");
  std::sort(edges_.begin(), edges_.end());
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= ell || b >= ell)
      throw std::invalid_argument("BipartiteGraph: index out of range");
    if (adj_[a] >> b & 1)
      throw std::invalid_argument("BipartiteGraph: duplicate edge");
    adj_[a] |= 1ULL << b;
  }
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_h_graph(const HParams& p) {
  const int n = static_cast<int>(p.n);
  if (p.n > 64) throw std::invalid_argument("build_h_graph: n too large");
  const int a = p.a;
  const int b_end = a + static_cast<int>(p.size_b());
  Graph g(n);
  // A complete to B
  for (int u = 0; u < a; ++u)
    for (int v = a; v < b_end; ++v) g.add_edge(u, v);
  // clique on A ∪ C
  std::vector<int> ac;
  for (int u = 0; u < a; ++u) ac.push_back(u);
  for (int u = b_end; u < n; ++u) ac.push_back(u);
  for (size_t i = 0; i < ac.size(); ++i)
    for (size_t j = i + 1; j < ac.size(); ++j) g.add_edge(ac[i], ac[j]);
  return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if (seen >> v & 1) continue;
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = g.neighbors(x) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    std::vector<int> verts;
    for (std::uint64_t m = comp; m; m &= m - 1)
      verts.push_back(std::countr_zero(m));
    comps.push_back(std::move(verts));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return comps;
}

namespace {

struct BridgeDfs {
  const Graph& g;
  std::vector<int> tin, low;
  std::vector<Edge> out;
  int timer = 0;

  explicit BridgeDfs(const Graph& gg)
      : g(gg), tin(gg.vertex_count(), -1), low(gg.vertex_count(), -1) {}

  void run(int v, int parent) {
    tin[v] = low[v] = timer++;
    bool skipped_parent = false;
    for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
      int to = std::countr_zero(m);
      if (to == parent && !skipped_parent) {
        skipped_parent = true;  // simple graph: one parent edge
        continue;
      }
      if (tin[to] != -1) {
        low[v] = std::min(low[v], tin[to]);
      } else {
        run(to, v);
        low[v] = std::min(low[v], low[to]);
        if (low[to] > tin[v]) out.emplace_back(v, to);
      }
    }
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  BridgeDfs dfs(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.tin[v] == -1) dfs.run(v, -1);
  std::sort(dfs.out.begin(), dfs.out.end());
  return dfs.out;
}

namespace detail {

namespace {

bool extend_path(const std::vector<std::uint64_t>& adj, int k,
                 std::vector<int>& path, std::uint64_t used) {
  if (static_cast<int>(path.size()) == k) return true;
  std::uint64_t cand = adj[path.back()] & ~used;
  while (cand) {
    int w = std::countr_zero(cand);
    cand &= cand - 1;
    path.push_back(w);
    if (extend_path(adj, k, path, used | (1ULL << w))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool mask_has_path_on(const std::vector<std::uint64_t>& adj, int n, int k,
                      std::vector<int>* witness) {
  if (k < 1 || k > n) return false;
  std::vector<int> path;
  path.reserve(k);
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    if (extend_path(adj, k, path, 1ULL << s)) {
      if (witness) *witness = path;
      return true;
    }
  }
  return false;
}

}  // namespace detail

std::optional<PathWitness> has_path_on(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("has_path_on: k must be >= 1");
  std::vector<std::uint64_t> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  std::vector<int> w;
  if (detail::mask_has_path_on(adj, g.vertex_count(), k, &w))
    return PathWitness{std::move(w)};
  return std::nullopt;
}

namespace {

// Alternating cycle search: vertices ids are a in [0,ell), ell+b for B.
bool extend_cycle(const BipartiteGraph& g, std::vector<int>& cyc,
                  std::uint64_t used_a, std::uint64_t used_b) {
  const int ell = g.ell();
  if (static_cast<int>(cyc.size()) == 2 * ell) {
    // close back to A-vertex 0
    return g.has_edge(0, cyc.back() - ell);
  }
  const bool last_is_a = cyc.size() % 2 == 1;  // positions 0,2,... hold A
  if (last_is_a) {
    int a = cyc.back();
    for (int b = 0; b < ell; ++b) {
      if ((used_b >> b & 1) || !g.has_edge(a, b)) continue;
      cyc.push_back(ell + b);
      if (extend_cycle(g, cyc, used_a, used_b | (1ULL << b))) return true;
      cyc.pop_back();
    }
  } else {
    int b = cyc.back() - ell;
    for (int a = 0; a < ell; ++a) {
      if ((used_a >> a & 1) || !g.has_edge(a, b)) continue;
      cyc.push_back(a);
      if (extend_cycle(g, cyc, used_a | (1ULL << a), used_b)) return true;
      cyc.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> bipartite_hamilton_cycle(
    const BipartiteGraph& b) {
  if (b.ell() < 2)
    throw std::invalid_argument("bipartite_hamilton_cycle: need ell >= 2");
  std::vector<int> cyc{0};
  if (extend_cycle(b, cyc, 1, 0)) return cyc;
  return std::nullopt;
}

}  // namespace arp
