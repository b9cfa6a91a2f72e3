#include "arp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace arp {

namespace {

int edge_id(int n, int u, int v) {
  // lexicographic rank of (u,v), u < v, in the edge list of K_n
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// All P_k vertex sequences of K_n as edge-id lists, one per unordered
// path (first vertex < last vertex), grouped by their maximum edge id.
std::vector<std::vector<std::vector<int>>> paths_by_max_edge(int n, int k) {
  const int m = n * (n - 1) / 2;
  std::vector<std::vector<std::vector<int>>> by_max(m);
  std::vector<int> seq;
  auto rec = [&](auto&& self, std::uint64_t used) -> void {
    if (static_cast<int>(seq.size()) == k) {
      if (seq.front() > seq.back()) return;
      std::vector<int> eids;
      int mx = 0;
      for (int i = 0; i + 1 < k; ++i) {
        int id = edge_id(n, std::min(seq[i], seq[i + 1]),
                         std::max(seq[i], seq[i + 1]));
        eids.push_back(id);
        mx = std::max(mx, id);
      }
      by_max[mx].push_back(std::move(eids));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      seq.push_back(v);
      self(self, used | (1ULL << v));
      seq.pop_back();
    }
  };
  rec(rec, 0);
  return by_max;
}

struct ArSearch {
  int m;
  int best = 0;
  std::vector<int> color;
  std::vector<int> best_color;
  const std::vector<std::vector<std::vector<int>>>& by_max;
  SearchStats stats;

  // does coloring edge i close a rainbow P_k?
  bool makes_rainbow(int i) const {
    for (const auto& path : by_max[i]) {
      std::uint32_t mask = 0;
      bool dup = false;
      for (int eid : path) {
        std::uint32_t bit = 1u << color[eid];
        if (mask & bit) {
          dup = true;
          break;
        }
        mask |= bit;
      }
      if (!dup) return true;
    }
    return false;
  }

  void dfs(int i, int used_classes) {
    ++stats.nodes_expanded;
    if (i == m) {
      if (used_classes > best) {
        best = used_classes;
        best_color = color;
      }
      return;
    }
    if (used_classes + (m - i) <= best) {
      ++stats.pruned_by_bound;
      return;
    }
    // restricted growth: only colors 0..used_classes are admissible here
    for (int c = 0; c <= used_classes; ++c) {
      color[i] = c;
      if (makes_rainbow(i)) {
        ++stats.pruned_by_rainbow;
        continue;
      }
      dfs(i + 1, std::max(used_classes, c + 1));
    }
    color[i] = -1;
  }
};

}  // namespace

ExactArResult exact_ar(int n, int k) {
  if (k < 5 || n < k || n > 7)
    throw std::domain_error(
        "exact_ar: supported range is 5 <= k <= n <= 7; larger instances "
        "are refused for reproducibility");
  const auto t0 = std::chrono::steady_clock::now();
  Graph host = complete_graph(n);
  const auto by_max = paths_by_max_edge(n, k);
  ArSearch search{host.edge_count(), 0,
                  std::vector<int>(host.edge_count(), -1), {}, by_max, {}};
  search.dfs(0, 0);
  search.stats.elapsed = std::chrono::steady_clock::now() - t0;

  EdgeColoring witness(host, search.best_color);
  if (witness.color_count() != search.best ||
      find_rainbow_path_exact(witness, k))
    throw std::logic_error("exact_ar: witness failed validation");
  return ExactArResult{search.best, std::move(witness), search.stats};
}

namespace {

bool mask_connected(const std::vector<std::uint64_t>& adj, int n) {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t nb = adj[v] & ~seen;
    seen |= nb;
    frontier |= nb;
  }
  return seen == (n == 64 ? ~0ULL : (1ULL << n) - 1);
}

i64 brute_ex_impl(int n, int k, bool connected_only) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const int m = static_cast<int>(all.size());
  i64 best = -1;
  std::vector<std::uint64_t> adj(n);
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    const int cnt = std::popcount(mask);
    if (cnt <= best) continue;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::uint64_t b = mask; b; b &= b - 1) {
      const Edge& e = all[std::countr_zero(b)];
      adj[e.u] |= 1ULL << e.v;
      adj[e.v] |= 1ULL << e.u;
    }
    if (connected_only && !mask_connected(adj, n)) continue;
    if (!detail::mask_has_path_on(adj, n, k, nullptr)) best = cnt;
  }
  return best;
}

}  // namespace

i64 brute_ex(int n, int k) {
  if (n < 0 || n > 7)
    throw std::domain_error("brute_ex: supported range is 0 <= n <= 7");
  if (k < 2) throw std::invalid_argument("brute_ex: k must be >= 2");
  if (n <= 1) return 0;
  return brute_ex_impl(n, k, false);
}

i64 brute_ex_con(int n, int k) {
  if (n < 1 || n > 7)
    throw std::domain_error("brute_ex_con: supported range is 1 <= n <= 7");
  if (k < 4) throw std::invalid_argument("brute_ex_con: k must be >= 4");
  if (n == 1) return 0;
  return brute_ex_impl(n, k, true);
}

SweepReport verify_lemma_parts(int max_k, int max_n, int max_t) {
  if (max_k > 9 || max_n > 30 || max_t > 4)
    throw std::domain_error(
        "verify_lemma_parts: budget is max_k <= 9, max_n <= 30, max_t <= 4");
  SweepReport rep;
  {
    std::ostringstream os;
    os << "4 <= k2 <= k1 <= " << max_k << ", t <= " << max_t
       << ", n <= " << max_n;
    rep.range_descriptor = os.str();
  }
  std::vector<int> parts;
  auto check = [&](int k1, int k2, int n, int n0) {
    const int k = k1 + k2 - 1;
    i64 lhs =
        turan_path_connected(n0, k1) + static_cast<i64>(parts.size()) - 1;
    for (int ni : parts) lhs += turan_path_connected(ni, k2);
    const i64 rhs = ar_value(n, k).value;
    ++rep.instances_checked;
    if (lhs >= rhs) {
      std::ostringstream os;
      os << "k1=" << k1 << " k2=" << k2 << " n0=" << n0 << " parts=[";
      for (size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
      os << "] lhs=" << lhs << " rhs=" << rhs;
      (lhs > rhs ? rep.counterexamples : rep.tight_cases).push_back(os.str());
    }
  };
  for (int k1 = 4; k1 <= max_k; ++k1)
    for (int k2 = 4; k2 <= k1; ++k2) {
      const int k = k1 + k2 - 1;
      for (int n = k; n <= max_n; ++n)
        for (int n0 = k1 - 1; n0 < n; ++n0) {
          // partitions of n - n0 into at most max_t descending parts
          auto enumer = [&](auto&& self, int remaining, int max_first) -> void {
            if (remaining == 0) {
              check(k1, k2, n, n0);
              return;
            }
            if (static_cast<int>(parts.size()) == max_t) return;
            for (int first = std::min(remaining, max_first); first >= 1;
                 --first) {
              parts.push_back(first);
              self(self, remaining - first, first);
              parts.pop_back();
            }
          };
          enumer(enumer, n - n0, n - n0);
        }
    }
  return rep;
}

SweepReport verify_subadditivity(int k, int max_m) {
  if (k > 8 || max_m > 18)
    throw std::domain_error(
        "verify_subadditivity: budget is k <= 8, max_m <= 18");
  if (k < 2) throw std::invalid_argument("verify_subadditivity: k >= 2");
  SweepReport rep;
  {
    std::ostringstream os;
    os << "k=" << k << ", partitions of every m <= " << max_m;
    rep.range_descriptor = os.str();
  }
  std::vector<int> stack;
  for (int m = 1; m <= max_m; ++m) {
    const TuranDecomposition d(m, k, TuranDecomposition::Convention::Appendix);
    const i64 rhs = turan_path(m, k) + d.s;
    auto enumer = [&](auto&& self, int remaining, int max_first) -> void {
      if (remaining == 0) {
        i64 lhs = static_cast<i64>(stack.size()) - 1;
        for (int mi : stack) lhs += turan_path(mi, k);
        ++rep.instances_checked;
        if (lhs >= rhs) {
          std::ostringstream os;
          os << "m=" << m << " parts=[";
          for (size_t i = 0; i < stack.size(); ++i)
            os << (i ? "," : "") << stack[i];
          os << "] lhs=" << lhs << " rhs=" << rhs;
          (lhs > rhs ? rep.counterexamples : rep.tight_cases)
              .push_back(os.str());
        }
        return;
      }
      for (int first = std::min(remaining, max_first); first >= 1; --first) {
        stack.push_back(first);
        self(self, remaining - first, first);
        stack.pop_back();
      }
    };
    enumer(enumer, m, m);
  }
  return rep;
}

SweepReport verify_bipartite_lemma(int ell) {
  if (ell < 2 || ell > 5)
    throw std::domain_error("verify_bipartite_lemma: supported 2 <= ell <= 5");
  SweepReport rep;
  const int threshold = (ell - 1) * ell + 2;
  {
    std::ostringstream os;
    os << "ell=" << ell << ", all bipartite graphs with >= " << threshold
       << " edges";
    rep.range_descriptor = os.str();
  }
  const int cells = ell * ell;
  for (std::uint64_t mask = 0; mask < (1ULL << cells); ++mask) {
    if (std::popcount(mask) < threshold) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t b = mask; b; b &= b - 1) {
      int cell = std::countr_zero(b);
      edges.emplace_back(cell / ell, cell % ell);
    }
    BipartiteGraph g(ell, std::move(edges));
    ++rep.instances_checked;
    const bool found = bipartite_hamilton_cycle(g).has_value();
    if (!found) {
      std::ostringstream os;
      os << "ell=" << ell << " mask=" << mask << ": no Hamilton cycle";
      rep.counterexamples.push_back(os.str());
    } else if (std::popcount(mask) == threshold) {
      std::ostringstream os;
      os << "ell=" << ell << " mask=" << mask << " edges=" << threshold;
      rep.tight_cases.push_back(os.str());
    }
  }
  return rep;
}

SweepReport formula_consistency_sweep(int max_k, int max_n) {
  if (max_k > 60 || max_n > 300)
    throw std::domain_error(
        "formula_consistency_sweep: budget is max_k <= 60, max_n <= 300");
  SweepReport rep;
  {
    std::ostringstream os;
    os << "5 <= k <= " << max_k << ", k <= n <= " << max_n;
    rep.range_descriptor = os.str();
  }
  for (int k = 5; k <= max_k; ++k) {
    const int ell = (k - 1) / 2;
    const i64 twice_threshold = k % 2 == 1 ? 5LL * ell - 2 : 5LL * ell + 2;
    for (i64 n = k; n <= max_n; ++n) {
      ++rep.instances_checked;
      const FormulaValue a = anti_ramsey(n, k);
      const FormulaValue b = ar_value(n, k);
      std::ostringstream os;
      os << "n=" << n << " k=" << k;
      if (a.value != b.value || a.branch != b.branch) {
        os << ": anti_ramsey=" << a.value << "/" << branch_name(a.branch)
           << " ar_value=" << b.value << "/" << branch_name(b.branch);
        rep.counterexamples.push_back(os.str());
        continue;
      }
      const bool clique_side = 2 * n <= twice_threshold;
      if (clique_side != (b.branch != Branch::Star)) {
        os << ": branch " << branch_name(b.branch)
           << " disagrees with threshold";
        rep.counterexamples.push_back(os.str());
      } else if (b.branch == Branch::Tie) {
        os << " tie at " << b.value;
        rep.tight_cases.push_back(os.str());
      }
    }
  }
  return rep;
}

}  // namespace arp
