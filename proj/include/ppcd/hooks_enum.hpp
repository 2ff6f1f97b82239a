#pragma once

// p'-hooks, the quasihook families and the lower bound |cd_{p'}^{ext}(A_n)| >= 3.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "ppcd/arith.hpp"
#include "ppcd/degrees.hpp"
#include "ppcd/error.hpp"
#include "ppcd/partition.hpp"

namespace ppcd {

inline constexpr int default_exact_scan_bound = 40;

/// Exact-mode scan bound: PPCD_SCAN_BOUND if set to a positive integer, else 40.
inline int scan_bound_from_env() {
  if (const char* env = std::getenv("PPCD_SCAN_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= default_enumeration_bound)
      return static_cast<int>(v);
  }
  return default_exact_scan_bound;
}

/// Leg lengths x of the p'-hooks (n - x, 1^x), increasing. Uses
/// nu_p(C(n-1, x)) = nu_p((n-1)!) - nu_p(x!) - nu_p((n-1-x)!).
inline std::vector<int> pprime_hook_legs(int n, std::uint64_t p) {
  require_prime(p);
  if (n < 1) throw precondition_error("out-of-range", "n must be at least 1");
  const auto top = static_cast<std::uint64_t>(n - 1);
  const std::uint64_t whole = legendre(top, p);
  std::vector<int> legs;
  for (std::uint64_t x = 0; x <= top; ++x)
    if (legendre(x, p) + legendre(top - x, p) == whole) legs.push_back(static_cast<int>(x));
  return legs;
}

inline std::vector<Partition> list_pprime_hooks(int n, std::uint64_t p) {
  std::vector<Partition> hooks;
  for (int x : pprime_hook_legs(n, p)) hooks.push_back(hook_partition(n, x));
  return hooks;
}

/// a_1 p^{n_1} * prod_{j >= 2} (a_j + 1) over the p-adic digits of n.
inline Natural count_pprime_hooks_formula(int n, std::uint64_t p) {
  if (n < 1) throw precondition_error("out-of-range", "n must be at least 1");
  const auto expansion = p_adic_expansion(static_cast<std::uint64_t>(n), p);
  const auto& first = expansion.digits.front();
  Natural count = Natural(first.digit) * power(p, first.exponent);
  for (std::size_t j = 1; j < expansion.digits.size(); ++j)
    count *= expansion.digits[j].digit + 1;
  return count;
}

/// Builds the p'-hooks of n layer by layer: each p'-hook gamma of
/// m = n - a_k p^{n_k} yields (gamma_1 + x p^{n_k}, 1^...) for x = 0..a_k.
/// A single-digit n contributes every hook. Returns leg lengths, increasing.
inline std::vector<int> layered_pprime_hook_legs(int n, std::uint64_t p) {
  if (n < 1) throw precondition_error("out-of-range", "n must be at least 1");
  const auto expansion = p_adic_expansion(static_cast<std::uint64_t>(n), p);
  if (expansion.digits.size() == 1) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    return all;
  }
  const auto& top = expansion.top();
  const int layer = static_cast<int>(power(p, top.exponent));
  const int a = static_cast<int>(top.digit);
  const int m = n - a * layer;
  std::vector<int> legs;
  for (int gamma_leg : layered_pprime_hook_legs(m, p)) {
    const int gamma_row = m - gamma_leg;
    for (int x = 0; x <= a; ++x) legs.push_back(n - (gamma_row + x * layer));
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

inline std::vector<Partition> layered_pprime_hooks(int n, std::uint64_t p) {
  std::vector<Partition> hooks;
  for (int x : layered_pprime_hook_legs(n, p)) hooks.push_back(hook_partition(n, x));
  return hooks;
}

/// (n - c - t, c, 1^t) with only the checks that make it a partition.
/// Also builds shapes with c outside {2, 3}, e.g. the c = 5 counterexample.
inline Partition make_quasihook(int n, int c, int t) {
  if (c < 1 || t < 0 || n - c - t < c)
    throw precondition_error("out-of-range", "(n - c - t, c, 1^t) is not a partition");
  std::vector<int> parts{n - c - t, c};
  parts.insert(parts.end(), static_cast<std::size_t>(t), 1);
  return Partition(std::move(parts));
}

/// lambda(t) = (n - c - t, c, 1^t) for c in {2, 3}, n >= 4 + c, 0 <= t <= n - 2c.
inline Partition quasihook(int n, int c, int t) {
  if (c != 2 && c != 3)
    throw precondition_error("out-of-range", "quasihook needs c in {2, 3}");
  if (n < 4 + c) throw precondition_error("out-of-range", "quasihook needs n >= 4 + c");
  if (t < 0 || t > n - 2 * c)
    throw precondition_error("out-of-range", "quasihook needs 0 <= t <= n - 2c");
  return make_quasihook(n, c, t);
}

inline bool degree_increases(const Partition& from, const Partition& to) {
  return degree(from) < degree(to);
}

/// Largest t with chi^{lambda(t)}(1) < chi^{lambda(t+1)}(1) guaranteed.
inline int quasihook_monotone_t_max(int n, int c) { return (n - 4 - c) / 2; }

inline bool quasihook_monotone(int n, int c, int t) {
  if (c != 2 && c != 3)
    throw precondition_error("out-of-range", "quasihook needs c in {2, 3}");
  if (n < 4 + c) throw precondition_error("out-of-range", "quasihook needs n >= 4 + c");
  if (t < 0 || t > quasihook_monotone_t_max(n, c))
    throw precondition_error("out-of-range", "need 0 <= t <= floor((n - 4 - c) / 2)");
  return degree_increases(quasihook(n, c, t), quasihook(n, c, t + 1));
}

/// If m = 1 + p^k (k >= 1), returns k; otherwise 0.
inline unsigned one_plus_prime_power_exponent(int m, std::uint64_t p) {
  if (m < 2) return 0;
  auto rest = static_cast<std::uint64_t>(m - 1);
  unsigned k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  return rest == 1 ? k : 0;
}

/// The p'-partitions of m = 1 + p^k: (p^k - t, 2, 1^{t-1}) for t = 1..p^k - 2,
/// together with (m) and (1^m). Returned in descending lexicographic order.
inline std::vector<Partition> pprime_partitions_small(int m, std::uint64_t p) {
  require_prime(p);
  if (one_plus_prime_power_exponent(m, p) == 0)
    throw precondition_error("bad-shape", std::to_string(m) + " is not 1 + " +
                                              std::to_string(p) + "^k with k >= 1");
  const int pk = m - 1;
  std::vector<Partition> out;
  out.push_back(Partition{m});
  for (int t = 1; t <= pk - 2; ++t) {
    std::vector<int> parts{pk - t, 2};
    parts.insert(parts.end(), static_cast<std::size_t>(t - 1), 1);
    out.emplace_back(std::move(parts));
  }
  out.push_back(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)));
  return out;
}

struct ExtDegreeSet {
  std::set<Natural> degrees;
  /// True when every partition of n was scanned; false means a certified subset.
  bool exact = false;
};

/// A partition offered as evidence, with its degree and whether it was
/// confirmed p' (Macdonald test) and non-self-conjugate.
struct Witness {
  Partition partition;
  Natural degree;
  bool certified = false;
};

/// The p-adic shape of n that decides which family supplies the witnesses.
enum class AnCase {
  hooks,                  // floor(|L_{p'}(n)| / 2) >= 3
  one_plus_a_pk,          // n = 1 + a p^k
  one_plus_pk_plus_ph,    // n = 1 + p^k + p^h, k < h
  two_plus_pk,            // n = 2 + p^k, p^k != 5
  direct_scan,            // n = 7, p = 5
};

inline const char* to_string(AnCase c) {
  switch (c) {
    case AnCase::hooks: return "hooks";
    case AnCase::one_plus_a_pk: return "1+a*p^k";
    case AnCase::one_plus_pk_plus_ph: return "1+p^k+p^h";
    case AnCase::two_plus_pk: return "2+p^k";
    case AnCase::direct_scan: return "direct-scan";
  }
  return "?";
}

struct AnBoundResult {
  bool ok = false;
  AnCase method = AnCase::hooks;
  std::vector<Witness> witnesses;
  /// Distinct witness degrees, increasing.
  std::vector<Natural> distinct_degrees;
};

inline Natural halved_count_lower_bound(int n, std::uint64_t p) {
  return count_pprime_hooks_formula(n, p) / 2;
}

namespace detail {

inline void require_alternating_prime(std::uint64_t p) {
  require_prime(p);
  if (p <= 3) throw precondition_error("out-of-range", "p must be greater than 3");
}

inline Witness certify(Partition lambda, std::uint64_t p) {
  Witness w{std::move(lambda), 0, false};
  w.certified = !is_self_conjugate(w.partition) && is_pprime_macdonald(w.partition, p);
  w.degree = degree(w.partition);
  return w;
}

inline AnCase classify(int n, std::uint64_t p) {
  if (n == 7 && p == 5) return AnCase::direct_scan;
  const auto digits = p_adic_expansion(static_cast<std::uint64_t>(n), p).digits;
  const auto& d = digits;
  if (d.size() == 2 && d[0].exponent == 0 && d[0].digit == 1 && d[1].digit <= 4)
    return AnCase::one_plus_a_pk;
  if (d.size() == 3 && d[0].exponent == 0 && d[0].digit == 1 && d[1].digit == 1 &&
      d[2].digit == 1)
    return AnCase::one_plus_pk_plus_ph;
  if (d.size() == 2 && d[0].exponent == 0 && d[0].digit == 2 && d[1].digit == 1)
    return AnCase::two_plus_pk;
  return AnCase::hooks;
}

// Non-self-conjugate p'-hooks with lambda_1 > lambda'_1; their degrees are distinct.
inline std::vector<Witness> hook_witnesses(int n, std::uint64_t p) {
  std::vector<Witness> out;
  for (int x : pprime_hook_legs(n, p))
    if (n - x > x + 1) out.push_back(certify(hook_partition(n, x), p));
  return out;
}

inline std::vector<Witness> quasihook_witnesses(int n, int c, std::uint64_t p) {
  std::vector<Witness> out;
  out.push_back(certify(Partition{n}, p));
  const int t_max = (n - 4 - c) / 2;
  for (int t = 0; t <= t_max; ++t) out.push_back(certify(quasihook(n, c, t), p));
  return out;
}

inline std::vector<Witness> row_extension_witnesses(int n, std::uint64_t p) {
  const auto digits = p_adic_expansion(static_cast<std::uint64_t>(n), p).digits;
  const int low = 1 + static_cast<int>(power(p, digits[1].exponent));
  const int high = static_cast<int>(power(p, digits[2].exponent));
  std::vector<Witness> out;
  for (const auto& gamma : pprime_partitions_small(low, p)) {
    auto parts = gamma.parts();
    parts[0] += high;
    out.push_back(certify(Partition(std::move(parts)), p));
  }
  return out;
}

inline std::vector<Witness> scan_witnesses(int n, std::uint64_t p) {
  std::vector<Witness> out;
  for_each_partition(n, [&](const Partition& lambda) {
    if (!is_self_conjugate(lambda) && is_pprime_oracle(lambda, p))
      out.push_back(certify(lambda, p));
  });
  return out;
}

inline std::vector<Natural> distinct_degrees(const std::vector<Witness>& ws) {
  std::set<Natural> s;
  for (const auto& w : ws) s.insert(w.degree);
  return {s.begin(), s.end()};
}

}  // namespace detail

/// Checks |cd_{p'}^{ext}(A_n)| >= 3 with explicit witnesses chosen by the
/// p-adic shape of n. ok requires every witness certified and at least three
/// distinct degrees (the trivial degree 1 among them).
inline AnBoundResult verify_An_bound(int n, std::uint64_t p) {
  detail::require_alternating_prime(p);
  if (n < 7) throw precondition_error("out-of-range", "n must be at least 7");
  AnBoundResult r;
  r.method = detail::classify(n, p);
  switch (r.method) {
    case AnCase::hooks: r.witnesses = detail::hook_witnesses(n, p); break;
    case AnCase::one_plus_a_pk: r.witnesses = detail::quasihook_witnesses(n, 2, p); break;
    case AnCase::two_plus_pk: r.witnesses = detail::quasihook_witnesses(n, 3, p); break;
    case AnCase::one_plus_pk_plus_ph: r.witnesses = detail::row_extension_witnesses(n, p); break;
    case AnCase::direct_scan: r.witnesses = detail::scan_witnesses(n, p); break;
  }
  r.distinct_degrees = detail::distinct_degrees(r.witnesses);
  const bool all_certified = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                                         [](const Witness& w) { return w.certified; });
  const bool has_trivial = !r.distinct_degrees.empty() && r.distinct_degrees.front() == 1;
  r.ok = all_certified && has_trivial && r.distinct_degrees.size() >= 3;
  return r;
}

/// Degrees of p'-characters of A_n that extend to S_n, i.e. chi^lambda(1)
/// for p'-partitions lambda != lambda'. Exact for n <= scan_bound; above it,
/// the union of the hook, quasihook and row-extension families (certified
/// members only), which is a lower bound.
inline ExtDegreeSet ext_pprime_degree_set(int n, std::uint64_t p,
                                          int scan_bound = default_exact_scan_bound) {
  detail::require_alternating_prime(p);
  if (n < 5) throw precondition_error("out-of-range", "n must be at least 5");
  ExtDegreeSet out;
  if (n <= scan_bound) {
    out.exact = true;
    for_each_partition(n, [&](const Partition& lambda) {
      if (!is_self_conjugate(lambda) && is_pprime_oracle(lambda, p))
        out.degrees.insert(degree(lambda));
    }, std::max(scan_bound, n));
    return out;
  }
  auto add = [&](const std::vector<Witness>& ws) {
    for (const auto& w : ws)
      if (w.certified) out.degrees.insert(w.degree);
  };
  add(detail::hook_witnesses(n, p));
  for (int c : {2, 3})
    if (n >= 4 + c) add(detail::quasihook_witnesses(n, c, p));
  if (detail::classify(n, p) == AnCase::one_plus_pk_plus_ph)
    add(detail::row_extension_witnesses(n, p));
  return out;
}

}  // namespace ppcd
