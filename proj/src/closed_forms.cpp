#include "arp/closed_forms.hpp"

#include <string>

namespace arp {

namespace {

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in closed form");
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in closed form");
  return out;
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Clique: return "CLIQUE";
    case Branch::Star: return "STAR";
    case Branch::Tie: return "TIE";
  }
  return "?";
}

i64 choose2(i64 n) {
  if (n < 2) return 0;
  return checked_mul(n, n - 1) / 2;
}

PathSpec::PathSpec(int k_) : k(k_) {
  if (k < 3) throw std::invalid_argument("PathSpec: k must be >= 3");
  ell = (k - 1) / 2;
  odd = k % 2 == 1;
  epsilon = odd ? 1 : 2;
}

TuranDecomposition::TuranDecomposition(i64 n, int k, Convention conv)
    : convention(conv) {
  if (k < 2) throw std::invalid_argument("TuranDecomposition: k must be >= 2");
  if (n < 0) throw std::invalid_argument("TuranDecomposition: n must be >= 0");
  const i64 q = k - 1;
  if (conv == Convention::Theorem2) {
    s = n / q;
    r = n % q;  // 0 <= r <= k-2
  } else {
    if (n < 1)
      throw std::invalid_argument(
          "TuranDecomposition: appendix convention needs n >= 1");
    s = (n - 1) / q;
    r = n - s * q;  // 1 <= r <= k-1
  }
}

HParams::HParams(i64 n_, int k_, int a_) : n(n_), k(k_), a(a_) {
  if (a < 0 || k < 2 * a || n < k)
    throw std::invalid_argument("HParams: need n >= k >= 2a >= 0");
}

int epsilon_of(int k) {
  if (k < 3) throw std::invalid_argument("epsilon_of: k must be >= 3");
  return k % 2 == 1 ? 1 : 2;
}

i64 h_value(const HParams& p) {
  return checked_add(choose2(p.k - p.a), checked_mul(p.a, p.n - p.k + p.a));
}

i64 turan_path(i64 n, int k) {
  if (k < 2) throw std::invalid_argument("turan_path: k must be >= 2");
  if (n < 0) throw std::invalid_argument("turan_path: n must be >= 0");
  if (n <= k - 1) return choose2(n);
  TuranDecomposition d(n, k, TuranDecomposition::Convention::Theorem2);
  return checked_add(checked_mul(d.s, choose2(k - 1)), choose2(d.r));
}

i64 turan_path_connected(i64 n, int k) {
  if (n < 0) throw std::invalid_argument("turan_path_connected: n must be >= 0");
  if (n <= k - 1) return choose2(n);
  if (k < 4)
    throw std::domain_error(
        "turan_path_connected: unsupported for k < 4 with n >= k");
  const int s = (k - 2) / 2;
  return std::max(h_value(HParams(n, k - 1, 1)), h_value(HParams(n, k - 1, s)));
}

namespace {

void check_theorem_range(i64 n, int k, const char* who) {
  if (k < 5 || n < k)
    throw std::domain_error(std::string(who) +
                            ": outside theorem range, need n >= k >= 5");
}

FormulaValue pick(i64 clique, i64 star) {
  FormulaValue out;
  out.value = std::max(clique, star);
  out.branch = clique == star ? Branch::Tie
             : clique > star ? Branch::Clique
                             : Branch::Star;
  return out;
}

}  // namespace

FormulaValue ar_value(i64 n, int k) {
  check_theorem_range(n, k, "ar_value");
  const int ell = (k - 1) / 2;
  const int i = k % 2 == 1 ? 0 : 1;
  const i64 clique = h_value(HParams(k, k - 1, 1)) - 1;
  const i64 star = h_value(HParams(n, k - 1, ell - 1)) - i;
  return pick(clique, star);
}

FormulaValue anti_ramsey(i64 n, int k) {
  check_theorem_range(n, k, "anti_ramsey");
  const PathSpec p(k);
  const i64 clique = choose2(k - 2) + 1;
  const i64 star = checked_add(
      choose2(p.ell - 1),
      checked_add(checked_mul(p.ell - 1, n - p.ell + 1), p.epsilon));
  return pick(clique, star);
}

Branch attaining_branch(i64 n, int k) { return ar_value(n, k).branch; }

}  // namespace arp
