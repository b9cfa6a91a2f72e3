#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "arp/coloring.hpp"
#include "arp/rainbow.hpp"

// Independent ground truth: exact anti-Ramsey values by branch-and-bound
// over edge-color partitions, brute-force Turan values, and exhaustive
// numeric sweeps of the supporting lemmas and formula identities.

namespace arp {

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t pruned_by_rainbow = 0;
  std::uint64_t pruned_by_bound = 0;
  std::chrono::duration<double> elapsed{0};
};

// One instance of the part-sum lemma: n = n0 + n1 + ... + nt with
// n0 >= k1-1 and n1 >= ... >= nt >= 1.
struct PartsInstance {
  int k1;
  int k2;
  int n0;
  std::vector<int> parts;  // n1..nt, descending
};

struct SweepReport {
  std::string range_descriptor;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> counterexamples;  // must stay empty
  std::vector<std::string> tight_cases;      // instances achieving equality

  bool passed() const { return counterexamples.empty(); }
};

struct ExactArResult {
  i64 value = 0;
  EdgeColoring witness;
  SearchStats stats;
};

// Maximum number of colors over all edge colorings of K_n with no
// rainbow P_k, by exhaustive restricted-growth-string enumeration with
// rainbow and bound pruning. Supported only for 5 <= k <= n <= 7.
ExactArResult exact_ar(int n, int k);

// Maximum edges of a P_k-free graph on n labeled vertices, over all
// 2^C(n,2) graphs. Supported for n <= 7.
i64 brute_ex(int n, int k);

// Same restricted to connected graphs. Supported for 1 <= n <= 7.
i64 brute_ex_con(int n, int k);

// Numeric sweep of the part-sum lemma:
//   ex_con(n0,P_k1) + sum ex_con(ni,P_k2) + t-1 <= ar(n, k1+k2-1)
// over 4 <= k2 <= k1 <= max_k, t <= max_t, n <= max_n.
SweepReport verify_lemma_parts(int max_k, int max_n, int max_t);

// Numeric sweep of the partition claim:
//   sum ex(mi,P_k) + t-1 <= ex(m,P_k) + s
// over all integer partitions of every m <= max_m, with s from the
// appendix decomposition convention (1 <= r <= k-1).
SweepReport verify_subadditivity(int k, int max_m);

// Exhaustive check that every bipartite graph with classes of size ell
// and at least (ell-1)*ell+2 edges has a Hamilton cycle. 2 <= ell <= 5.
SweepReport verify_bipartite_lemma(int ell);

// anti_ramsey == ar_value (and branch matches the parity thresholds) for
// all 5 <= k <= max_k, k <= n <= max_n.
SweepReport formula_consistency_sweep(int max_k, int max_n);

}  // namespace arp
