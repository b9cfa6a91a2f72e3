#include "arp/rainbow.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace arp {

namespace {

struct ExactSearch {
  const EdgeColoring& col;
  int k;
  std::vector<int> path;
  std::vector<int> path_colors;
  std::vector<char> used_color;

  ExactSearch(const EdgeColoring& c, int kk)
      : col(c), k(kk), used_color(c.color_count(), 0) {}

  bool extend(std::uint64_t used_vertices) {
    if (static_cast<int>(path.size()) == k) return true;
    const int v = path.back();
    std::uint64_t cand = col.host().neighbors(v) & ~used_vertices;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      int c = col.color_of(v, w);
      if (used_color[c]) continue;
      used_color[c] = 1;
      path.push_back(w);
      path_colors.push_back(c);
      if (extend(used_vertices | (1ULL << w))) return true;
      path.pop_back();
      path_colors.pop_back();
      used_color[c] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowCertificate> find_rainbow_path_exact(
    const EdgeColoring& col, int k) {
  if (k < 2) throw std::invalid_argument("find_rainbow_path_exact: k >= 2");
  if (k > col.host().vertex_count()) return std::nullopt;
  ExactSearch s(col, k);
  for (int start = 0; start < col.host().vertex_count(); ++start) {
    s.path.assign(1, start);
    s.path_colors.clear();
    if (s.extend(1ULL << start))
      return RainbowCertificate{s.path, s.path_colors};
  }
  return std::nullopt;
}

int default_colorcoding_iterations(int k) {
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  const int b = k - 1;
  double p = 1.0;
  for (int i = 1; i <= b; ++i) p *= static_cast<double>(i) / b;
  return static_cast<int>(std::ceil(std::log(100.0) / p));
}

namespace {

// Path reconstruction: backtracking over bucket-distinct paths with
// distinct vertices (the DP admits walks, so the walk table alone cannot
// certify a path).
struct GuidedSearch {
  const EdgeColoring& col;
  const std::vector<int>& bucket_of;  // per color
  int k;
  std::vector<int> path;
  std::vector<int> path_colors;

  bool extend(std::uint64_t used_vertices, int bucket_mask) {
    if (static_cast<int>(path.size()) == k) return true;
    const int v = path.back();
    std::uint64_t cand = col.host().neighbors(v) & ~used_vertices;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      int c = col.color_of(v, w);
      int b = bucket_of[c];
      if (bucket_mask >> b & 1) continue;
      path.push_back(w);
      path_colors.push_back(c);
      if (extend(used_vertices | (1ULL << w), bucket_mask | (1 << b)))
        return true;
      path.pop_back();
      path_colors.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowCertificate> find_rainbow_path_colorcoding(
    const EdgeColoring& col, int k, int iterations, std::uint64_t seed) {
  if (k < 2)
    throw std::invalid_argument("find_rainbow_path_colorcoding: k >= 2");
  if (iterations < 1)
    throw std::invalid_argument("find_rainbow_path_colorcoding: iterations >= 1");
  const int n = col.host().vertex_count();
  if (k > n) return std::nullopt;
  const int buckets = k - 1;
  if (buckets > 20)
    throw std::invalid_argument("find_rainbow_path_colorcoding: k too large");

  for (int it = 0; it < iterations; ++it) {
    std::seed_seq sseq{seed, static_cast<std::uint64_t>(it)};
    std::mt19937_64 rng(sseq);
    std::uniform_int_distribution<int> dist(0, buckets - 1);
    std::vector<int> bucket_of(col.color_count());
    for (int& b : bucket_of) b = dist(rng);

    // dp[mask][v]: a walk ending at v whose edges carry exactly the
    // buckets in mask (walks may revisit vertices; reconstruction below
    // filters to genuine paths).
    std::vector<std::vector<char>> dp(1 << buckets,
                                      std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) dp[0][v] = 1;
    for (int mask = 0; mask < (1 << buckets); ++mask) {
      for (int v = 0; v < n; ++v) {
        if (!dp[mask][v]) continue;
        std::uint64_t nb = col.host().neighbors(v);
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          int b = bucket_of[col.color_of(v, w)];
          if (!(mask >> b & 1)) dp[mask | (1 << b)][w] = 1;
        }
      }
    }
    bool any_full = false;
    const int full = (1 << buckets) - 1;
    for (int v = 0; v < n && !any_full; ++v) any_full = dp[full][v];
    if (!any_full) continue;

    GuidedSearch gs{col, bucket_of, k, {}, {}};
    for (int start = 0; start < n; ++start) {
      gs.path.assign(1, start);
      gs.path_colors.clear();
      if (gs.extend(1ULL << start, 0)) {
        RainbowCertificate cert{gs.path, gs.path_colors};
        if (validate_certificate(col, cert)) return cert;
      }
    }
  }
  return std::nullopt;
}

bool validate_certificate(const EdgeColoring& col,
                          const RainbowCertificate& cert) {
  const size_t k = cert.vertices.size();
  if (k < 2 || cert.colors.size() != k - 1) return false;
  std::uint64_t seen_v = 0;
  for (int v : cert.vertices) {
    if (v < 0 || v >= col.host().vertex_count()) return false;
    if (seen_v >> v & 1) return false;
    seen_v |= 1ULL << v;
  }
  std::vector<char> seen_c(col.color_count(), 0);
  for (size_t i = 0; i + 1 < k; ++i) {
    int u = cert.vertices[i], v = cert.vertices[i + 1];
    if (!col.host().has_edge(u, v)) return false;
    int c = col.color_of(u, v);
    if (c != cert.colors[i]) return false;
    if (seen_c[c]) return false;
    seen_c[c] = 1;
  }
  return true;
}

}  // namespace arp
