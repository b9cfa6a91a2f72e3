#pragma once

#include <optional>
#include <vector>

#include "arp/graph.hpp"

// Edge colorings, the two extremal rainbow-free constructions,
// representing graphs, and the good-coloring decomposition procedure.

namespace arp {

// Surjective assignment of color ids [0,c) to every edge of a host graph.
// Colors are stored parallel to host.edges() (lexicographic edge order).
class EdgeColoring {
 public:
  EdgeColoring(Graph host, std::vector<int> colors);

  const Graph& host() const { return host_; }
  int color_count() const { return c_; }
  const std::vector<int>& colors() const { return colors_; }

  int edge_index(int u, int v) const;  // -1 if no such edge
  int color_of(int u, int v) const;    // throws if no such edge
  int color_of_edge(int idx) const { return colors_[idx]; }

  // Edges of one color class, lexicographic order.
  std::vector<Edge> color_class(int color) const;

 private:
  Graph host_;
  std::vector<int> colors_;
  int c_;
};

// One chosen edge per color; the induced subgraph has exactly c edges.
struct RepresentingGraph {
  std::vector<Edge> chosen;  // indexed by color id

  Graph subgraph(int n) const;
};

// Parameters of the star construction: X = {0,...,t-1} with
// t = floor((k-3)/2), plus i in {1,2} extra colors off X.
struct StarConstructionParams {
  int n;
  int k;
  int t;
  int extra_colors;

  StarConstructionParams(int n_, int k_);
};

struct GoodColoringResult {
  RepresentingGraph representing;
  std::vector<Edge> cut_set;               // deleted chosen edges
  std::vector<int> cut_colors;             // their colors, sorted
  std::vector<std::vector<int>> parts;     // components after deletion
};

// Rainbow K_{k-2} on vertices {0,...,k-3}, one shared color elsewhere.
// Exactly C(k-2,2)+1 colors.
EdgeColoring construct_clique_coloring(int n, int k);

// All edges meeting X = {0,...,t-1} rainbow; the remaining edges split
// into i classes (for i=2: edge {u,v}, u<v off X, joins class 1 when u-t
// is even, class 2 otherwise). Color count equals the star branch of the
// anti-Ramsey formula.
EdgeColoring construct_star_coloring(int n, int k);

// For each color, the lexicographically least edge of its class.
RepresentingGraph arbitrary_representing(const EdgeColoring& col);

// Greedy exchange from arbitrary_representing: while some host edge
// crossing two components can replace the chosen edge of its color and
// strictly grow the largest component, do so. Host must be complete.
RepresentingGraph max_component_representing(const EdgeColoring& col);

// Iteratively delete color classes from the representing subgraph,
// starting with seed (default: all bridge colors of rep), absorbing at
// each round every color on a host edge joining two current components,
// until a fixpoint. Returns nullopt if the fixpoint deleted a chosen
// edge that is not a bridge of rep's subgraph.
std::optional<GoodColoringResult> good_coloring_decompose(
    const EdgeColoring& col, const RepresentingGraph& rep,
    std::optional<std::vector<int>> seed = std::nullopt);

}  // namespace arp
