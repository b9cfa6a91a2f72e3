#pragma once

#include <cstdint>
#include <stdexcept>

// Closed-form evaluation of the extremal functions for paths: the edge
// count h(n,k,a) of the three-part graph H(n,k,a), the Turan numbers
// ex(n,P_k) and ex_con(n,P_k), and the two equivalent expressions for the
// anti-Ramsey number of P_k, with branch attainment analysis.

namespace arp {

using i64 = std::int64_t;

// Which term of the max attains the value.
enum class Branch { Clique, Star, Tie };

struct FormulaValue {
  i64 value = 0;
  Branch branch = Branch::Tie;
};

const char* branch_name(Branch b);

// k, l = floor((k-1)/2) and the parity-dependent constant epsilon.
struct PathSpec {
  int k;
  int ell;
  int epsilon;  // 1 for odd k, 2 for even k
  bool odd;

  explicit PathSpec(int k_);
};

// n = s*(k-1) + r under one of the two remainder conventions.
struct TuranDecomposition {
  enum class Convention { Theorem2, Appendix };  // 0<=r<=k-2 vs 1<=r<=k-1

  i64 s = 0;
  i64 r = 0;
  Convention convention;

  TuranDecomposition(i64 n, int k, Convention conv);
};

// Parameters of H(n,k,a): |A|=a, |B|=n-k+a, |C|=k-2a.
struct HParams {
  i64 n;
  int k;
  int a;

  HParams(i64 n_, int k_, int a_);

  i64 size_a() const { return a; }
  i64 size_b() const { return n - k + a; }
  i64 size_c() const { return k - 2 * a; }
};

// epsilon of Theorem-1's second branch: 1 for odd k, 2 for even k.
int epsilon_of(int k);

// h(n,k,a) = C(k-a,2) + a*(n-k+a).
i64 h_value(const HParams& p);

// ex(n,P_k); extended to n <= k-1 as C(n,2).
i64 turan_path(i64 n, int k);

// ex_con(n,P_k) = max{h(n,k-1,1), h(n,k-1,floor((k-2)/2))}; extended to
// n <= k-1 as C(n,2). Rejects k=3 with n >= 3 (no such connected graph
// family; the formula degenerates).
i64 turan_path_connected(i64 n, int k);

// ar(n,k) = max{h(k,k-1,1)-1, h(n,k-1,l-1)-i}, i = 0 odd / 1 even.
FormulaValue ar_value(i64 n, int k);

// AR(n,P_k) = max{C(k-2,2)+1, C(l-1,2)+(l-1)(n-l+1)+epsilon}, evaluated
// directly from that expression (independent of ar_value).
FormulaValue anti_ramsey(i64 n, int k);

// Branch of ar_value(n,k).
Branch attaining_branch(i64 n, int k);

// C(n,2) with overflow checking; used throughout the closed forms.
i64 choose2(i64 n);

}  // namespace arp
