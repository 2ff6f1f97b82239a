#pragma once

// Integer partitions and Young-diagram hook arithmetic.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ppcd/arith.hpp"
#include "ppcd/error.hpp"

namespace ppcd {

/// A weakly decreasing sequence of positive integers. Immutable.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped; any other violation of weak decrease throws.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw precondition_error("malformed-partition", "parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw precondition_error("malformed-partition", "parts must be weakly decreasing");
      size_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row access; rows past the length are 0.
  int row(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "4,1,1" form. The empty partition prints as "".
inline std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << to_string(p) << ')';
}

/// Parses the comma-separated CLI form; whitespace around parts is allowed.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw precondition_error("malformed-partition",
                               "cannot parse part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda.row(1)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lambda) {
  return lambda == conjugate(lambda);
}

/// Hook length at node (i, j), 1-based: arm + leg + 1.
inline int hook_length(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || j > lambda.row(i))
    throw precondition_error("node-out-of-diagram",
                             "node (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not in the diagram");
  int leg = 0;
  while (lambda.row(i + leg + 1) >= j) ++leg;
  return (lambda.row(i) - j) + leg + 1;
}

namespace detail {

// Calls f(h) for every hook length, row by row, using the conjugate for legs.
template <class F>
void for_each_hook(const Partition& lambda, F&& f) {
  const Partition col = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j)
      f((lambda.row(i) - j) + (col.row(j) - i) + 1);
}

}  // namespace detail

/// All hook lengths, sorted in decreasing order.
inline std::vector<int> hook_multiset(const Partition& lambda) {
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  detail::for_each_hook(lambda, [&](int h) { hooks.push_back(h); });
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

inline std::vector<int> divisible_hooks(const Partition& lambda, int e) {
  if (e < 2) throw precondition_error("bad-modulus", "e must be at least 2");
  std::vector<int> hooks;
  detail::for_each_hook(lambda, [&](int h) {
    if (h % e == 0) hooks.push_back(h);
  });
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

inline std::size_t count_divisible_hooks(const Partition& lambda, int e) {
  if (e < 2) throw precondition_error("bad-modulus", "e must be at least 2");
  std::size_t count = 0;
  detail::for_each_hook(lambda, [&](int h) { count += (h % e == 0); });
  return count;
}

/// e-core via the first-column hook lengths placed on an e-runner abacus:
/// every bead slides to the lowest free position on its runner.
inline Partition e_core(const Partition& lambda, int e) {
  if (e < 2) throw precondition_error("bad-modulus", "e must be at least 2");
  const int len = lambda.length();
  std::vector<int> beads_on_runner(static_cast<std::size_t>(e), 0);
  for (int i = 1; i <= len; ++i) {
    const int beta = lambda.row(i) + (len - i);
    ++beads_on_runner[static_cast<std::size_t>(beta % e)];
  }
  std::vector<int> beta;
  beta.reserve(static_cast<std::size_t>(len));
  for (int r = 0; r < e; ++r)
    for (int k = 0; k < beads_on_runner[static_cast<std::size_t>(r)]; ++k)
      beta.push_back(r + k * e);
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
  return Partition(std::move(parts));
}

/// n = sum a_j p^{n_j} with nonzero digits, exponents increasing.
struct PAdicExpansion {
  struct Digit {
    std::uint64_t digit;
    unsigned exponent;
    friend bool operator==(const Digit&, const Digit&) = default;
  };

  std::uint64_t prime = 0;
  std::vector<Digit> digits;

  std::uint64_t value() const {
    std::uint64_t n = 0;
    for (const auto& d : digits) {
      std::uint64_t pk = 1;
      for (unsigned i = 0; i < d.exponent; ++i) pk *= prime;
      n += d.digit * pk;
    }
    return n;
  }

  /// Highest digit, i.e. a_k p^{n_k}. Precondition: !digits.empty().
  const Digit& top() const { return digits.back(); }
};

inline PAdicExpansion p_adic_expansion(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  PAdicExpansion out{p, {}};
  for (unsigned exponent = 0; n != 0; ++exponent, n /= p)
    if (n % p != 0) out.digits.push_back({n % p, exponent});
  return out;
}

inline constexpr int default_enumeration_bound = 60;

/// Partitions of n in descending lexicographic order, one at a time.
/// Single-consumer; not thread-safe.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int bound = default_enumeration_bound) : n_(n) {
    if (n < 0) throw precondition_error("negative", "n must be non-negative");
    if (n > bound)
      throw precondition_error("bound-exceeded", "n = " + std::to_string(n) +
                                                     " exceeds the scan bound " +
                                                     std::to_string(bound));
  }

  std::optional<Partition> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (n_ > 0) current_.push_back(n_);
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return Partition(current_);
  }

 private:
  // Steps to the lexicographic predecessor: take the rightmost part > 1,
  // lower it by one and refill the tail greedily.
  bool advance() {
    int ones = 0;
    while (!current_.empty() && current_.back() == 1) {
      current_.pop_back();
      ++ones;
    }
    if (current_.empty()) return false;
    const int k = --current_.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = std::min(k, rest);
      current_.push_back(take);
      rest -= take;
    }
    return true;
  }

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

inline std::vector<Partition> enumerate_partitions(int n, int bound = default_enumeration_bound) {
  std::vector<Partition> all;
  PartitionStream stream(n, bound);
  while (auto lambda = stream.next()) all.push_back(std::move(*lambda));
  return all;
}

/// Calls f(lambda) for every partition of n, in the same order as the stream.
template <class F>
void for_each_partition(int n, F&& f, int bound = default_enumeration_bound) {
  PartitionStream stream(n, bound);
  while (auto lambda = stream.next()) f(*lambda);
}

/// (n - leg, 1^leg)
inline Partition hook_partition(int n, int leg) {
  if (n < 1 || leg < 0 || leg > n - 1)
    throw precondition_error("out-of-range", "hook (" + std::to_string(n) + ", leg " +
                                                 std::to_string(leg) + ") is not a partition");
  std::vector<int> parts(static_cast<std::size_t>(leg + 1), 1);
  parts[0] = n - leg;
  return Partition(std::move(parts));
}

/// The n hook partitions in order of increasing leg length.
inline std::vector<Partition> enumerate_hooks(int n) {
  if (n < 1) throw precondition_error("out-of-range", "n must be at least 1");
  std::vector<Partition> hooks;
  hooks.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) hooks.push_back(hook_partition(n, x));
  return hooks;
}

inline bool is_hook(const Partition& lambda) { return lambda.row(2) <= 1; }

}  // namespace ppcd
