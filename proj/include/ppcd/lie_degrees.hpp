#pragma once

// Degree formulas in q for characters of finite groups of Lie type.
//
// Every degree used here factors as
//     scalar * q^e * prod (q^{m_i} - s_i) / prod (q^{m'_j} - s'_j),   s = +-1,
// so formulas are stored in that product form and evaluated exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppcd/arith.hpp"
#include "ppcd/error.hpp"

namespace ppcd::lie {

/// q^m - sign, sign in {+1, -1}.
struct CycloFactor {
  unsigned m = 1;
  int sign = 1;
  friend bool operator==(const CycloFactor&, const CycloFactor&) = default;
};

class DegreeFormula {
 public:
  DegreeFormula() = default;

  DegreeFormula& times(unsigned m, int sign) {
    numerator_.push_back(checked(m, sign));
    return *this;
  }
  DegreeFormula& over(unsigned m, int sign) {
    denominator_.push_back(checked(m, sign));
    return *this;
  }
  DegreeFormula& scaled(std::int64_t num, std::int64_t den) {
    if (num <= 0 || den <= 0) throw precondition_error("bad-scalar", "scalar must be positive");
    scalar_num_ *= num;
    scalar_den_ *= den;
    return *this;
  }
  DegreeFormula& with_qpower(unsigned e) {
    qpower_ = e;
    return *this;
  }

  std::int64_t scalar_numerator() const noexcept { return scalar_num_; }
  std::int64_t scalar_denominator() const noexcept { return scalar_den_; }
  unsigned qpower() const noexcept { return qpower_; }
  const std::vector<CycloFactor>& numerator() const noexcept { return numerator_; }
  const std::vector<CycloFactor>& denominator() const noexcept { return denominator_; }

  friend bool operator==(const DegreeFormula&, const DegreeFormula&) = default;

 private:
  static CycloFactor checked(unsigned m, int sign) {
    if (m == 0 || (sign != 1 && sign != -1))
      throw precondition_error("bad-factor", "factor must be q^m +- 1 with m >= 1");
    return {m, sign};
  }

  std::int64_t scalar_num_ = 1;
  std::int64_t scalar_den_ = 1;
  unsigned qpower_ = 0;
  std::vector<CycloFactor> numerator_;
  std::vector<CycloFactor> denominator_;
};

inline std::string to_string(const DegreeFormula& f) {
  auto factor = [](const CycloFactor& c) {
    std::string s = "(q";
    if (c.m != 1) s += "^" + std::to_string(c.m);
    s += c.sign == 1 ? "-1)" : "+1)";
    return s;
  };
  std::string num;
  if (f.scalar_numerator() != 1) num += std::to_string(f.scalar_numerator());
  if (f.qpower() == 1) num += "q";
  if (f.qpower() > 1) num += "q^" + std::to_string(f.qpower());
  for (const auto& c : f.numerator()) num += factor(c);
  if (num.empty()) num = "1";
  std::string den;
  if (f.scalar_denominator() != 1) den += std::to_string(f.scalar_denominator());
  for (const auto& c : f.denominator()) den += factor(c);
  if (den.empty()) return num;
  const bool wrap = f.denominator().size() + (f.scalar_denominator() != 1) > 1;
  return num + "/" + (wrap ? "(" + den + ")" : den);
}

/// Reduced fraction with positive denominator.
struct Rational {
  Natural num = 0;
  Natural den = 1;
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) {
  return r.is_integer() ? r.num.str() : r.num.str() + "/" + r.den.str();
}

/// p-adic valuation of a nonzero rational.
inline int valuation(const Rational& r, std::uint64_t p) {
  return static_cast<int>(ppcd::valuation(r.num, p)) - static_cast<int>(ppcd::valuation(r.den, p));
}

inline void require_prime_power(std::uint64_t q) {
  if (!is_prime_power(q))
    throw precondition_error("not-prime-power", std::to_string(q) + " is not a prime power");
}

inline Rational eval_rational(const DegreeFormula& f, std::uint64_t q) {
  require_prime_power(q);
  const Natural Q = q;
  auto term = [&](const CycloFactor& c) {
    Natural v = boost::multiprecision::pow(Q, c.m);
    return c.sign == 1 ? Natural(v - 1) : Natural(v + 1);
  };
  Rational r{Natural(f.scalar_numerator()) * boost::multiprecision::pow(Q, f.qpower()),
             Natural(f.scalar_denominator())};
  for (const auto& c : f.numerator()) r.num *= term(c);
  for (const auto& c : f.denominator()) r.den *= term(c);
  const Natural g = boost::multiprecision::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

/// Exact integer value at q; throws non_integral_error if the scalar or the
/// denominators do not clear.
inline Natural eval_formula(const DegreeFormula& f, std::uint64_t q) {
  Rational r = eval_rational(f, q);
  if (!r.is_integer())
    throw non_integral_error(to_string(f) + " at q = " + std::to_string(q) + " is " +
                             to_string(r));
  return r.num;
}

/// N with every factor r removed.
inline Natural qprime_part(Natural n, std::uint64_t r) {
  if (n == 0) throw precondition_error("zero", "the r'-part of 0 is undefined");
  if (r < 2) throw precondition_error("out-of-range", "r must be at least 2");
  while (n % r == 0) n /= r;
  return n;
}

inline Natural pprime_part(const Natural& n, std::uint64_t p) { return qprime_part(n, p); }

// --- Orders and semisimple characters ---------------------------------------

/// |GL_n^eps(q)| = q^{n(n-1)/2} prod_{i=1}^n (q^i - eps^i).
inline Natural gl_order(unsigned n, int epsilon, const Natural& q) {
  if (n == 0) throw precondition_error("out-of-range", "rank must be at least 1");
  if (epsilon != 1 && epsilon != -1)
    throw precondition_error("out-of-range", "epsilon must be +1 or -1");
  if (q < 2) throw precondition_error("not-prime-power", "q must be at least 2");
  Natural order = boost::multiprecision::pow(q, n * (n - 1) / 2);
  Natural qi = 1;
  for (unsigned i = 1; i <= n; ++i) {
    qi *= q;
    const bool minus = epsilon == 1 || i % 2 == 0;
    order *= minus ? Natural(qi - 1) : Natural(qi + 1);
  }
  return order;
}

inline Natural gl_order(unsigned n, int epsilon, std::uint64_t q) {
  require_prime_power(q);
  return gl_order(n, epsilon, Natural(q));
}

/// One factor GL_rank^sign(q^twist) of a centralizer.
struct CentralizerFactor {
  unsigned rank = 1;
  int sign = 1;
  unsigned twist = 1;
};

struct CentralizerSpec {
  std::vector<CentralizerFactor> factors;

  unsigned ambient_rank() const {
    unsigned total = 0;
    for (const auto& f : factors) total += f.rank * f.twist;
    return total;
  }
};

/// Degree of the semisimple character attached to s with the given
/// centralizer: [GL_n^eps(q) : C(s)]_{r'} where q is a power of r.
inline Natural semisimple_degree(unsigned n, int epsilon, std::uint64_t q, std::uint64_t r,
                                 const CentralizerSpec& centralizer) {
  require_prime(r);
  require_prime_power(q);
  if (prime_power_base(q) != r)
    throw precondition_error("out-of-range", std::to_string(q) + " is not a power of " +
                                                 std::to_string(r));
  if (centralizer.factors.empty() || centralizer.ambient_rank() != n)
    throw precondition_error("invalid-centralizer", "sum of rank * twist must equal n");
  Natural sub = 1;
  for (const auto& f : centralizer.factors) {
    if (f.twist == 0) throw precondition_error("invalid-centralizer", "twist must be >= 1");
    sub *= gl_order(f.rank, f.sign, boost::multiprecision::pow(Natural(q), f.twist));
  }
  Natural index, rem;
  boost::multiprecision::divide_qr(gl_order(n, epsilon, q), sub, index, rem);
  if (rem != 0)
    throw precondition_error("invalid-centralizer", "centralizer order does not divide |G|");
  return qprime_part(index, r);
}

// --- Families ----------------------------------------------------------------

enum class Family {
  A,       // A_{n-1}(q), rank parameter n
  A2,      // 2A_{n-1}(q)
  B,
  C,
  B2even,  // B_2(q), q a power of 2
  D,
  D4,
  D2,      // 2D_n(q)
  PSL2,
  PSL3e,   // PSL_3^eps(q); PSU_3 is eps = -1
  PSp4,
  Suzuki,  // 2B_2(q), q = 2^{2n+1} the field size
  Ree2G2,  // 2G_2(q), q = 3^{2n+1} the field size
  G2,
  F4,
  D4_3,    // 3D_4(q)
};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::A2: return "2A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::B2even: return "B2even";
    case Family::D: return "D";
    case Family::D4: return "D4";
    case Family::D2: return "2D";
    case Family::PSL2: return "PSL2";
    case Family::PSL3e: return "PSL3e";
    case Family::PSp4: return "PSp4";
    case Family::Suzuki: return "Suzuki";
    case Family::Ree2G2: return "Ree2G2";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::D4_3: return "3D4";
  }
  return "?";
}

/// Family plus the sign it implies: "PSL3" is eps = +1, "PSU3" is eps = -1.
struct GroupSpec {
  Family family = Family::A;
  unsigned rank = 0;
  int epsilon = 1;
};

inline GroupSpec parse_family(std::string_view name) {
  static constexpr std::pair<std::string_view, Family> names[] = {
      {"A", Family::A},         {"2A", Family::A2},       {"B", Family::B},
      {"C", Family::C},         {"B2even", Family::B2even}, {"D", Family::D},
      {"D4", Family::D4},       {"2D", Family::D2},       {"PSL2", Family::PSL2},
      {"PSL3e", Family::PSL3e}, {"PSL3", Family::PSL3e},  {"PSU3", Family::PSL3e},
      {"PSp4", Family::PSp4},   {"Suzuki", Family::Suzuki}, {"2B2", Family::Suzuki},
      {"Ree2G2", Family::Ree2G2}, {"2G2", Family::Ree2G2}, {"G2", Family::G2},
      {"F4", Family::F4},       {"3D4", Family::D4_3},
  };
  for (const auto& [key, fam] : names)
    if (key == name) return {fam, 0, name == "PSU3" ? -1 : 1};
  throw precondition_error("unknown-family", "unknown family '" + std::string(name) + "'");
}

inline bool is_classical_table_family(Family f) {
  switch (f) {
    case Family::A: case Family::A2: case Family::B: case Family::C: case Family::B2even:
    case Family::D: case Family::D4: case Family::D2:
      return true;
    default:
      return false;
  }
}

/// Smallest and largest rank for the unipotent table rows; 0 means unbounded above.
inline std::pair<unsigned, unsigned> rank_range(Family f) {
  switch (f) {
    case Family::A: case Family::A2: return {4, 0};
    case Family::B: case Family::C: return {2, 0};
    case Family::B2even: return {2, 2};
    case Family::D: return {5, 0};
    case Family::D4: return {4, 4};
    case Family::D2: return {4, 0};
    default:
      throw precondition_error("unsupported-family",
                               std::string(to_string(f)) + " has no unipotent table row");
  }
}

inline void require_rank(Family f, unsigned n) {
  const auto [lo, hi] = rank_range(f);
  if (n < lo || (hi != 0 && n > hi))
    throw precondition_error("rank-out-of-range", std::string(to_string(f)) + " rank " +
                                                      std::to_string(n) + " is out of range");
}

/// Parity side conditions: B/C with n = 2 needs q odd, B2even needs q even.
inline bool row_applies(Family f, unsigned n, std::uint64_t q) {
  if ((f == Family::B || f == Family::C) && n == 2) return q % 2 == 1;
  if (f == Family::B2even) return q % 2 == 0;
  return true;
}

/// A unipotent character by its (opaque) partition or symbol label.
struct UnipotentEntry {
  std::string label;
  DegreeFormula formula;  // chi(1)_{q'}
};

/// The two unipotent characters listed for a classical type.
inline std::pair<UnipotentEntry, UnipotentEntry> table1_pair(Family f, unsigned n) {
  require_rank(f, n);
  const auto N = std::to_string(n);
  const auto sgn = [](unsigned m) { return m % 2 == 0 ? 1 : -1; };  // (-1)^m
  switch (f) {
    case Family::A:
      return {{"(1," + std::to_string(n - 1) + ")", DegreeFormula().times(n - 1, 1).over(1, 1)},
              {"(2," + std::to_string(n - 2) + ")",
               DegreeFormula().times(n, 1).times(n - 3, 1).over(1, 1).over(2, 1)}};
    case Family::A2:
      return {{"(1," + std::to_string(n - 1) + ")",
               DegreeFormula().times(n - 1, sgn(n - 1)).over(1, -1)},
              {"(2," + std::to_string(n - 2) + ")",
               DegreeFormula().times(n, sgn(n)).times(n - 3, sgn(n - 3)).over(1, -1).over(2, 1)}};
    case Family::B:
    case Family::C:
      return {{"[1 " + N + " / 0]",
               DegreeFormula().times(n - 1, 1).times(n, -1).over(1, 1).scaled(1, 2)},
              {"[0 " + N + " / 1]",
               DegreeFormula().times(n - 1, -1).times(n, 1).over(1, 1).scaled(1, 2)}};
    case Family::B2even:
      return {{"[0 1 2 / -]", DegreeFormula().times(1, 1).times(1, 1).scaled(1, 2)},
              {"[0 2 / 1]", DegreeFormula().times(1, -1).times(1, -1).scaled(1, 2)}};
    case Family::D:
      return {{"[" + std::to_string(n - 1) + " / 1]",
               DegreeFormula().times(n, 1).times(n - 2, -1).over(2, 1)},
              {"[1 " + N + " / 0 1]",
               DegreeFormula().times(n - 1, -1).times(n - 1, 1).over(2, 1)}};
    case Family::D4:
      return {{"[1 3 / 0 2]",
               DegreeFormula().times(1, -1).times(1, -1).times(1, -1).times(3, -1).scaled(1, 2)},
              {"[1 2 / 0 3]",
               DegreeFormula().times(2, -1).times(2, -1).times(3, 1).over(1, 1).scaled(1, 2)}};
    case Family::D2:
      return {{"[1 " + std::to_string(n - 1) + " / -]",
               DegreeFormula().times(n, -1).times(n - 2, 1).over(2, 1)},
              {"[0 1 " + N + " / 1]",
               DegreeFormula().times(n - 1, -1).times(n - 1, 1).over(2, 1)}};
    default:
      break;
  }
  throw precondition_error("unsupported-family", "no table row");
}

/// Number of positive roots N; the Steinberg character has degree q^N.
inline unsigned steinberg_qpower(Family f, unsigned n) {
  require_rank(f, n);
  switch (f) {
    case Family::A: case Family::A2: return n * (n - 1) / 2;
    case Family::B: case Family::C: case Family::B2even: return n * n;
    case Family::D: case Family::D4: case Family::D2: return n * (n - 1);
    default: break;
  }
  throw precondition_error("unsupported-family", "no Steinberg exponent");
}

inline void require_nondefining(std::uint64_t q, std::uint64_t p) {
  require_prime(p);
  if (p <= 3) throw precondition_error("out-of-range", "p must be greater than 3");
  require_prime_power(q);
  if (q % p == 0)
    throw precondition_error("out-of-range", "p must not divide q");
}

struct Table1Evaluation {
  Rational d1;
  Rational d2;
  bool ok = false;  // at least one of d1, d2 is prime to p
};

/// Evaluates both unipotent degrees at q and tests them for divisibility by p.
/// Values are exact rationals; the p-adic valuation decides divisibility,
/// which for p > 3 ignores the factor 1/2 carried by some rows.
inline Table1Evaluation evaluate_table1(Family f, unsigned n, std::uint64_t q, std::uint64_t p) {
  require_nondefining(q, p);
  const auto [first, second] = table1_pair(f, n);
  if (!row_applies(f, n, q))
    throw precondition_error("parity", std::string(to_string(f)) + " rank " +
                                           std::to_string(n) + " does not apply to q = " +
                                           std::to_string(q));
  Table1Evaluation e{eval_rational(first.formula, q), eval_rational(second.formula, q), false};
  e.ok = valuation(e.d1, p) <= 0 || valuation(e.d2, p) <= 0;
  return e;
}

inline bool not_both_divisible(Family f, unsigned n, std::uint64_t q, std::uint64_t p) {
  return evaluate_table1(f, n, q, p).ok;
}

/// p does not divide d1 or d2, and d2 does not divide d1.
inline bool nondivisibility_check(const Natural& d1, const Natural& d2, std::uint64_t p) {
  if (d1 < 1 || d2 < 1) throw precondition_error("out-of-range", "degrees must be positive");
  return d1 % p != 0 && d2 % p != 0 && d1 % d2 != 0;
}

// --- Exceptional pairs --------------------------------------------------------

struct CharacterRecord {
  std::string label;
  DegreeFormula formula;
  Natural degree;
  bool extends_to_aut = false;
  bool p_group_invariant = false;
};

struct PairRecord {
  GroupSpec group;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::string source;  // which argument produced the pair
  std::string regime;  // the case that applied
  CharacterRecord chi1;
  CharacterRecord chi2;
};

namespace detail {

inline CharacterRecord character(std::string label, DegreeFormula f, std::uint64_t q,
                                 bool extends) {
  CharacterRecord c{std::move(label), std::move(f), 0, extends, true};
  c.degree = eval_formula(c.formula, q);
  return c;
}

inline DegreeFormula q_plus_1() { return DegreeFormula().times(1, -1); }
inline DegreeFormula q_minus_1() { return DegreeFormula().times(1, 1); }
inline DegreeFormula steinberg(unsigned e) { return DegreeFormula().with_qpower(e); }

inline bool is_square(std::uint64_t q, std::uint64_t r) {
  return prime_power_exponent(q, r) % 2 == 0;
}

// Splits the field exponent a = p^b * m with p not dividing m.
inline std::pair<unsigned, unsigned> split_exponent(unsigned a, std::uint64_t p) {
  unsigned b = 0;
  while (a % p == 0) {
    a /= static_cast<unsigned>(p);
    ++b;
  }
  return {b, a};
}

inline PairRecord psl2(std::uint64_t q, std::uint64_t p, std::uint64_t r) {
  if (q < 4) throw precondition_error("not-simple", "PSL2(q) needs q >= 4");
  PairRecord rec{{Family::PSL2, 2, 1}, q, p, "", "", {}, {}};
  const unsigned a = prime_power_exponent(q, r);
  const auto [b, m] = split_exponent(a, p);
  const bool nonsquare = !is_square(q, r);
  if (r == p) {
    rec.source = "defining characteristic, semisimple characters";
    if (p > 5) {
      rec.regime = "p > 5";
      rec.chi1 = character("s1: C = GL1(q)^2", q_plus_1(), q, true);
      rec.chi2 = character("s2: C = GL1(q^2)", q_minus_1(), q, nonsquare);
    } else if (m > 1) {
      rec.regime = m % 2 ? "p = 5, m > 1 odd" : "p = 5, m > 1 even";
      const auto f1 = m % 2 ? q_minus_1() : q_plus_1();
      const auto f2 = m % 2 ? q_plus_1() : q_minus_1();
      rec.chi1 = character("s1: eigenvalues xi_1", f1, q, true);
      rec.chi2 = character("s2", f2, q, false);
    } else {
      rec.regime = "p = 5, m = 1";
      rec.chi1 = character("s1: eigenvalues xi_1", q_minus_1(), q, true);
      rec.chi2 = character("field-invariant (q+1)/2", q_plus_1().scaled(1, 2), q, false);
    }
    return rec;
  }
  const Natural q2m1 = Natural(q) * q - 1;
  if (r > 3) {
    rec.source = "cross characteristic, r > 3";
    const bool both_extend = r > 5 && ((q + 1) % p != 0 || nonsquare);
    if (q2m1 % p != 0) {
      rec.regime = "p does not divide q^2-1";
      rec.chi1 = character("s1: C = GL1(q)^2", q_plus_1(), q, true);
      rec.chi2 = character("s2: C = GL1(q^2)", q_minus_1(), q, both_extend);
      return rec;
    }
    const bool plus = (q + 1) % p != 0;
    rec.regime = plus ? "p | q-1" : "p | q+1";
    rec.chi1 = character("St", steinberg(1), q, true);
    rec.chi2 = character(plus ? "C = GL1(q)^2" : "C = GL1(q^2)", plus ? q_plus_1() : q_minus_1(),
                         q, both_extend);
    return rec;
  }
  rec.source = "cross characteristic, r in {2, 3}";
  rec.chi1 = character("St", steinberg(1), q, true);
  if (b >= 1 && m == 1) {
    rec.regime = "q = r^{p^b}";
    if (r == 3) {
      rec.chi2 = character("field-invariant (q-1)/2", q_minus_1().scaled(1, 2), q, false);
    } else {
      const bool plus = (q - 1) % 3 == 0;
      rec.chi2 = character("s: |delta| = 3", plus ? q_plus_1() : q_minus_1(), q, false);
    }
    return rec;
  }
  const bool plus = (q + 1) % p != 0;
  rec.regime = "q = r^{p^b m}, m > 1";
  rec.chi2 = character(plus ? "|delta| = r^m-1" : "|delta| = r^m+1",
                       plus ? q_plus_1() : q_minus_1(), q, false);
  return rec;
}

inline PairRecord psl3(std::uint64_t q, std::uint64_t p, std::uint64_t r, int eps) {
  if (eps == -1 && q < 3) throw precondition_error("not-simple", "PSU3(q) needs q >= 3");
  PairRecord rec{{Family::PSL3e, 3, eps}, q, p, "", "", {}, {}};
  const bool nonsquare = !is_square(q, r);
  // q^2 + eps q + 1 as (q^3 - eps)/(q - eps)
  auto middle = [&](DegreeFormula f) { return f.times(3, eps).over(1, eps); };
  if (r == p) {
    rec.source = "defining characteristic, semisimple characters";
    rec.regime = eps == 1 ? "eps = +1" : "eps = -1";
    rec.chi1 = character(eps == 1 ? "s1: C = GL1(q)^3" : "s1: C = GL1(q^2) x GU1(q)",
                         middle(q_plus_1()), q, true);
    rec.chi2 = character(eps == 1 ? "s2: C = GL1(q^2) x GL1(q)" : "s2: C = GU1(q)^3",
                         middle(q_minus_1()), q, nonsquare);
    return rec;
  }
  rec.source = r > 3 ? "cross characteristic, r > 3" : "cross characteristic, r in {2, 3}";
  rec.chi1 = character("St", steinberg(3), q, true);
  if ((Natural(q) + eps) % p != 0) {
    rec.regime = "p does not divide q+eps";
    rec.chi2 = character("unipotent q(q+eps)", DegreeFormula().with_qpower(1).times(1, -eps), q,
                         true);
  } else {
    rec.regime = "p | q+eps";
    rec.chi2 = character("s: eigenvalues {delta, delta^-1, 1}", DegreeFormula().times(3, eps), q,
                         false);
  }
  return rec;
}

inline PairRecord psp4(std::uint64_t q, std::uint64_t p, std::uint64_t r) {
  if (q < 3) throw precondition_error("not-simple", "PSp4(q) needs q >= 3");
  PairRecord rec{{Family::PSp4, 2, 1}, q, p, "", "", {}, {}};
  if (r == p) {
    rec.source = "defining characteristic, chi_8(k) and chi_6(l)";
    rec.regime = is_square(q, r) ? "q square" : "q nonsquare";
    rec.chi1 = character("chi_8(k)", q_plus_1().times(4, 1).over(2, 1), q, true);
    rec.chi2 = character("chi_6(l)", q_minus_1().times(4, 1).over(2, 1), q, !is_square(q, r));
    return rec;
  }
  rec.source = "cross characteristic, Steinberg and a B2 unipotent";
  rec.chi1 = character("St", steinberg(4), q, true);
  std::vector<CharacterRecord> options;
  if (q % 2 == 1) {
    rec.regime = "q odd";
    options.push_back(character("[1 2 / 0]", DegreeFormula().with_qpower(1).times(4, 1).over(2, 1).scaled(1, 2), q, true));
    options.push_back(character("[0 2 / 1]", DegreeFormula().with_qpower(1).times(1, -1).times(1, -1).scaled(1, 2), q, true));
  } else {
    rec.regime = "q even";
    options.push_back(character("[0 1 2 / -]", DegreeFormula().with_qpower(1).times(1, 1).times(1, 1).scaled(1, 2), q, false));
    options.push_back(character("[0 2 / 1]", DegreeFormula().with_qpower(1).times(1, -1).times(1, -1).scaled(1, 2), q, false));
  }
  for (auto& c : options)
    if (c.degree % p != 0) {
      rec.chi2 = std::move(c);
      return rec;
    }
  throw invariant_error("both B2 unipotent degrees divisible by p");
}

inline PairRecord twisted_rank_one(Family f, std::uint64_t q, std::uint64_t p, std::uint64_t r) {
  const std::uint64_t base = f == Family::Suzuki ? 2 : 3;
  const unsigned a = prime_power_exponent(q, r);
  if (r != base || a % 2 == 0 || a < 3)
    throw precondition_error("out-of-range", std::string(to_string(f)) + " needs q = " +
                                                 std::to_string(base) + "^{2n+1}, n >= 1");
  if ((Natural(q) * q - 1) % p != 0)
    throw precondition_error("out-of-range", "p must divide q^2 - 1 (q the field size)");
  PairRecord rec{{f, 0, 1}, q, p, "", "p | q^2-1", {}, {}};
  if (f == Family::Suzuki) {
    rec.source = "Suzuki, Steinberg and chi_5";
    rec.chi1 = character("St", steinberg(2), q, true);
    rec.chi2 = character("chi_5(s)", DegreeFormula().times(4, 1).over(2, 1), q, false);
  } else {
    rec.source = "Ree, Steinberg and the unique character of degree q^2-q+1";
    rec.chi1 = character("St", steinberg(3), q, true);
    rec.chi2 = character("unique q^2-q+1", DegreeFormula().times(3, -1).over(1, -1), q, true);
  }
  return rec;
}

inline PairRecord exceptional_defining(Family f, std::uint64_t q, std::uint64_t p,
                                       std::uint64_t r) {
  if (r != p)
    throw precondition_error("out-of-range", std::string(to_string(f)) +
                                                 " is only covered in defining characteristic");
  PairRecord rec{{f, 0, 1}, q, p, "defining characteristic, unique degrees", "", {}, {}};
  const auto q4q2 = DegreeFormula().times(6, 1).over(2, 1);      // q^4+q^2+1
  auto q8q4 = [] { return DegreeFormula().times(12, 1).over(4, 1); };  // q^8+q^4+1
  if (f == Family::G2) {
    const int eps = q % 6 == 1 ? 1 : -1;
    rec.regime = eps == 1 ? "q = 1 mod 6" : "q = -1 mod 6";
    rec.chi1 = character("unique q^4+q^2+1", q4q2, q, true);
    rec.chi2 = character("unique q^3+eps", DegreeFormula().times(3, -eps), q, true);
  } else if (f == Family::F4) {
    rec.chi1 = character("unique q^8+q^4+1", q8q4(), q, true);
    rec.chi2 = character("unique (q^2+1)(q^4+1)(q^8+q^4+1)",
                         q8q4().times(8, 1).over(2, 1), q, true);
  } else {
    rec.chi1 = character("unique q^8+q^4+1", q8q4(), q, true);
    rec.chi2 = character("chi_13(k)", q8q4().times(1, -1), q, true);
  }
  return rec;
}

}  // namespace detail

/// The two characters chosen for (group, q, p) by the case analysis for
/// the small-rank and twisted families. For Suzuki and Ree groups q is the
/// field size 2^{2n+1} or 3^{2n+1}.
inline PairRecord exceptional_pair(const GroupSpec& group, std::uint64_t q, std::uint64_t p) {
  require_prime(p);
  if (p <= 3) throw precondition_error("out-of-range", "p must be greater than 3");
  require_prime_power(q);
  const std::uint64_t r = prime_power_base(q);
  switch (group.family) {
    case Family::PSL2: return detail::psl2(q, p, r);
    case Family::PSL3e:
      if (group.epsilon != 1 && group.epsilon != -1)
        throw precondition_error("out-of-range", "epsilon must be +1 or -1");
      return detail::psl3(q, p, r, group.epsilon);
    case Family::PSp4: return detail::psp4(q, p, r);
    case Family::Suzuki:
    case Family::Ree2G2: return detail::twisted_rank_one(group.family, q, p, r);
    case Family::G2:
    case Family::F4:
    case Family::D4_3: return detail::exceptional_defining(group.family, q, p, r);
    default: break;
  }
  throw precondition_error("unsupported-family", std::string(to_string(group.family)) +
                                                     " has no exceptional pair");
}

inline bool nondivisibility_check(const PairRecord& rec) {
  return nondivisibility_check(rec.chi1.degree, rec.chi2.degree, rec.p);
}

}  // namespace ppcd::lie
