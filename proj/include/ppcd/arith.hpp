#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ppcd/error.hpp"

namespace ppcd {

using Natural = boost::multiprecision::cpp_int;

/// Deterministic trial division; inputs in this library are small.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw precondition_error("not-prime", std::to_string(p) + " is not prime");
}

/// If q = r^a with r prime and a >= 1, returns r; otherwise 0.
constexpr std::uint64_t prime_power_base(std::uint64_t q) noexcept {
  if (q < 2) return 0;
  std::uint64_t r = 2;
  while (r * r <= q && q % r != 0) ++r;
  if (q % r != 0) r = q;
  while (q % r == 0) q /= r;
  return q == 1 ? r : 0;
}

constexpr bool is_prime_power(std::uint64_t q) noexcept {
  return prime_power_base(q) != 0;
}

/// Exponent a with q = r^a; q must be a power of r.
constexpr unsigned prime_power_exponent(std::uint64_t q, std::uint64_t r) noexcept {
  unsigned a = 0;
  while (q > 1 && q % r == 0) {
    q /= r;
    ++a;
  }
  return a;
}

/// nu_p(n!) by Legendre's formula.
constexpr std::uint64_t legendre(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t v = 0;
  while (n >= p) {
    n /= p;
    v += n;
  }
  return v;
}

/// p-adic valuation of a positive machine integer.
constexpr unsigned valuation(std::uint64_t n, std::uint64_t p) noexcept {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline unsigned valuation(Natural n, std::uint64_t p) {
  if (n == 0) throw precondition_error("zero", "valuation of zero is undefined");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Natural factorial(std::uint64_t n) {
  Natural f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Natural b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline Natural power(std::uint64_t base, unsigned e) {
  return boost::multiprecision::pow(Natural(base), e);
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

}  // namespace ppcd
