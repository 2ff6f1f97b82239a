#pragma once

// Character degrees of S_n and A_n and the p'-degree test.

#include <cstdint>
#include <vector>

#include "ppcd/arith.hpp"
#include "ppcd/error.hpp"
#include "ppcd/partition.hpp"

namespace ppcd {

/// chi^lambda(1) = n! / prod(hook lengths). The division is checked.
inline Natural degree(const Partition& lambda) {
  Natural hook_product = 1;
  detail::for_each_hook(lambda, [&](int h) { hook_product *= h; });
  Natural quotient, remainder;
  boost::multiprecision::divide_qr(factorial(static_cast<std::uint64_t>(lambda.size())),
                                   hook_product, quotient, remainder);
  if (remainder != 0)
    throw invariant_error("hook product does not divide n! for " + to_string(lambda));
  return quotient;
}

/// Degree of the hook (n - x, 1^x), namely binomial(n - 1, x).
inline Natural hook_degree(int n, int x) {
  if (n < 1 || x < 0 || x > n - 1)
    throw precondition_error("out-of-range", "need 0 <= x <= n - 1");
  return binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(x));
}

/// nu_p(chi^lambda(1)) computed from Legendre's formula and the hook multiset;
/// n! is never formed.
inline std::uint64_t degree_valuation(const Partition& lambda, std::uint64_t p) {
  require_prime(p);
  const auto top = static_cast<std::int64_t>(legendre(static_cast<std::uint64_t>(lambda.size()), p));
  std::int64_t hooks = 0;
  detail::for_each_hook(lambda, [&](int h) {
    hooks += valuation(static_cast<std::uint64_t>(h), p);
  });
  if (hooks > top)
    throw invariant_error("negative degree valuation for " + to_string(lambda));
  return static_cast<std::uint64_t>(top - hooks);
}

/// p'-test by the valuation route.
inline bool is_pprime_oracle(const Partition& lambda, std::uint64_t p) {
  return degree_valuation(lambda, p) == 0;
}

/// p'-test by peeling p-adic layers: lambda is p' iff it has exactly a_k
/// hooks divisible by p^{n_k} (the top digit of n) and its p^{n_k}-core is p'.
inline bool is_pprime_macdonald(const Partition& lambda, std::uint64_t p) {
  require_prime(p);
  Partition current = lambda;
  while (static_cast<std::uint64_t>(current.size()) >= p) {
    const auto expansion = p_adic_expansion(static_cast<std::uint64_t>(current.size()), p);
    const auto& top = expansion.top();
    std::uint64_t layer = 1;
    for (unsigned i = 0; i < top.exponent; ++i) layer *= p;
    const int e = static_cast<int>(layer);
    if (count_divisible_hooks(current, e) != top.digit) return false;
    current = e_core(current, e);
  }
  return true;
}

/// Degrees of the irreducible constituents of the restriction to A_n:
/// one constituent if lambda != lambda', else two of half the degree.
inline std::vector<Natural> an_degrees(const Partition& lambda) {
  if (lambda.size() < 2) throw precondition_error("out-of-range", "need |lambda| >= 2");
  Natural d = degree(lambda);
  if (!is_self_conjugate(lambda)) return {d};
  if (d % 2 != 0)
    throw invariant_error("self-conjugate " + to_string(lambda) + " has odd degree");
  d /= 2;
  return {d, d};
}

}  // namespace ppcd
