#include "arp/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arp {

EdgeColoring::EdgeColoring(Graph host, std::vector<int> colors)
    : host_(std::move(host)), colors_(std::move(colors)) {
  if (colors_.size() != host_.edges().size())
    throw std::invalid_argument("EdgeColoring: one color per edge required");
  if (colors_.empty())
    throw std::invalid_argument("EdgeColoring: host has no edges");
  c_ = *std::max_element(colors_.begin(), colors_.end()) + 1;
  std::vector<bool> used(c_, false);
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("EdgeColoring: negative color");
    used[c] = true;
  }
  for (bool u : used)
    if (!u) throw std::invalid_argument("EdgeColoring: colors not surjective");
}

int EdgeColoring::edge_index(int u, int v) const {
  Edge e(u, v);
  const auto& es = host_.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e) return -1;
  return static_cast<int>(it - es.begin());
}

int EdgeColoring::color_of(int u, int v) const {
  int idx = edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("EdgeColoring: no such edge");
  return colors_[idx];
}

std::vector<Edge> EdgeColoring::color_class(int color) const {
  std::vector<Edge> out;
  for (size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i] == color) out.push_back(host_.edges()[i]);
  return out;
}

Graph RepresentingGraph::subgraph(int n) const {
  return Graph(n, chosen);
}

StarConstructionParams::StarConstructionParams(int n_, int k_)
    : n(n_), k(k_) {
  if (n < k || k < 5)
    throw std::invalid_argument("StarConstructionParams: need n >= k >= 5");
  t = (k - 3) / 2;
  extra_colors = k % 2 == 1 ? 1 : 2;
}

EdgeColoring construct_clique_coloring(int n, int k) {
  if (n < k || k < 5)
    throw std::invalid_argument("construct_clique_coloring: need n >= k >= 5");
  Graph host = complete_graph(n);
  std::vector<int> colors(host.edges().size());
  const int shared = static_cast<int>(choose2(k - 2));
  int next = 0;
  for (size_t i = 0; i < host.edges().size(); ++i) {
    const Edge& e = host.edges()[i];
    colors[i] = (e.v <= k - 3) ? next++ : shared;
  }
  return EdgeColoring(std::move(host), std::move(colors));
}

EdgeColoring construct_star_coloring(int n, int k) {
  StarConstructionParams p(n, k);
  Graph host = complete_graph(n);
  std::vector<int> colors(host.edges().size());
  const int base = static_cast<int>(choose2(p.t)) + p.t * (n - p.t);
  int next = 0;
  for (size_t i = 0; i < host.edges().size(); ++i) {
    const Edge& e = host.edges()[i];
    if (e.u < p.t) {
      colors[i] = next++;
    } else if (p.extra_colors == 1) {
      colors[i] = base;
    } else {
      colors[i] = base + ((e.u - p.t) % 2 == 0 ? 0 : 1);
    }
  }
  return EdgeColoring(std::move(host), std::move(colors));
}

RepresentingGraph arbitrary_representing(const EdgeColoring& col) {
  RepresentingGraph rep;
  rep.chosen.assign(col.color_count(), Edge(0, 1));
  std::vector<bool> seen(col.color_count(), false);
  for (size_t i = 0; i < col.colors().size(); ++i) {
    int c = col.colors()[i];
    if (!seen[c]) {
      seen[c] = true;
      rep.chosen[c] = col.host().edges()[i];
    }
  }
  return rep;
}

namespace {

// component index of each vertex, plus size of the largest component
struct CompInfo {
  std::vector<int> comp_of;
  size_t largest;
};

CompInfo component_info(const Graph& g) {
  CompInfo info;
  info.comp_of.assign(g.vertex_count(), -1);
  info.largest = 0;
  auto comps = components(g);
  for (size_t i = 0; i < comps.size(); ++i) {
    info.largest = std::max(info.largest, comps[i].size());
    for (int v : comps[i]) info.comp_of[v] = static_cast<int>(i);
  }
  return info;
}

}  // namespace

RepresentingGraph max_component_representing(const EdgeColoring& col) {
  const int n = col.host().vertex_count();
  if (col.host().edge_count() != static_cast<int>(choose2(n)))
    throw std::invalid_argument(
        "max_component_representing: host must be complete");
  RepresentingGraph rep = arbitrary_representing(col);
  bool improved = true;
  while (improved) {
    improved = false;
    CompInfo info = component_info(rep.subgraph(n));
    for (size_t i = 0; i < col.host().edges().size() && !improved; ++i) {
      const Edge& xy = col.host().edges()[i];
      if (info.comp_of[xy.u] == info.comp_of[xy.v]) continue;
      const int c = col.colors()[i];
      if (rep.chosen[c] == xy) continue;
      Edge old = rep.chosen[c];
      rep.chosen[c] = xy;
      CompInfo after = component_info(rep.subgraph(n));
      if (after.largest > info.largest) {
        improved = true;  // keep the exchange, rescan
      } else {
        rep.chosen[c] = old;
      }
    }
  }
  return rep;
}

std::optional<GoodColoringResult> good_coloring_decompose(
    const EdgeColoring& col, const RepresentingGraph& rep,
    std::optional<std::vector<int>> seed) {
  const int n = col.host().vertex_count();
  Graph sub = rep.subgraph(n);
  if (components(sub).size() != 1)
    throw std::invalid_argument("good_coloring_decompose: rep not connected");
  std::vector<Edge> cut_candidates = bridges(sub);
  if (cut_candidates.empty())
    throw std::invalid_argument("good_coloring_decompose: rep has no bridges");

  const int c = col.color_count();
  std::vector<bool> deleted(c, false);
  if (seed) {
    if (seed->empty())
      throw std::invalid_argument("good_coloring_decompose: empty seed");
    for (int s : *seed) {
      if (s < 0 || s >= c)
        throw std::invalid_argument("good_coloring_decompose: bad seed color");
      deleted[s] = true;
    }
  } else {
    for (const Edge& b : cut_candidates)
      deleted[col.color_of(b.u, b.v)] = true;
  }

  for (;;) {
    Graph cur(n);
    for (int ci = 0; ci < c; ++ci)
      if (!deleted[ci]) cur.add_edge(rep.chosen[ci].u, rep.chosen[ci].v);
    CompInfo info = component_info(cur);
    bool changed = false;
    for (size_t i = 0; i < col.host().edges().size(); ++i) {
      const Edge& e = col.host().edges()[i];
      if (info.comp_of[e.u] == info.comp_of[e.v]) continue;
      if (!deleted[col.colors()[i]]) {
        deleted[col.colors()[i]] = true;
        changed = true;
      }
    }
    if (!changed) {
      GoodColoringResult out;
      out.representing = rep;
      std::set<Edge> bridge_set(cut_candidates.begin(), cut_candidates.end());
      for (int ci = 0; ci < c; ++ci) {
        if (!deleted[ci]) continue;
        if (!bridge_set.count(rep.chosen[ci])) return std::nullopt;
        out.cut_set.push_back(rep.chosen[ci]);
        out.cut_colors.push_back(ci);
      }
      std::sort(out.cut_set.begin(), out.cut_set.end());
      out.parts = components(cur);
      return out;
    }
  }
}

}  // namespace arp
