#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arp/closed_forms.hpp"

// Plain graph machinery: components, bridges, exact path search, the
// H(n,k,a) construction and bipartite Hamilton cycles.

namespace arp {

// Unordered pair with u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on n labeled vertices, n <= 64.
// Edges are kept sorted; adjacency is mirrored in per-vertex bitmasks.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

// Bipartite graph with both classes of size ell; edges are (a,b) index
// pairs across the bipartition.
class BipartiteGraph {
 public:
  BipartiteGraph(int ell, std::vector<std::pair<int, int>> edges);

  int ell() const { return ell_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const { return adj_[a] >> b & 1; }

 private:
  int ell_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;  // A-side index -> B-side bitmask
};

struct PathWitness {
  std::vector<int> vertices;
};

Graph complete_graph(int n);

// H(n,k,a): vertices [0,a) = A, [a,a+|B|) = B, rest = C; all A-B edges
// plus a clique on A∪C.
Graph build_h_graph(const HParams& p);

// Connected components, ordered by decreasing size then smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// Cut edges, sorted.
std::vector<Edge> bridges(const Graph& g);

// A path on exactly k vertices, if any; exhaustive backtracking with
// ascending branch order, so the witness is deterministic.
std::optional<PathWitness> has_path_on(const Graph& g, int k);

// A cycle through all 2*ell vertices (A-vertex i is vertex i, B-vertex j
// is vertex ell+j), if any; exhaustive backtracking.
std::optional<std::vector<int>> bipartite_hamilton_cycle(
    const BipartiteGraph& b);

namespace detail {
// Path search on raw adjacency bitmasks; shared by has_path_on and the
// brute-force oracles.
bool mask_has_path_on(const std::vector<std::uint64_t>& adj, int n, int k,
                      std::vector<int>* witness);
}  // namespace detail

}  // namespace arp
