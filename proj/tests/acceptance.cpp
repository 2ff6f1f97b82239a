// Acceptance run: one PASS/FAIL line per criterion, with the time it took
// and the first counterexample when there is one. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ppcd/ppcd.hpp"

namespace {

using ppcd::Natural;
using ppcd::Partition;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p)
    if (ppcd::is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> prime_powers_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= hi; ++q)
    if (ppcd::is_prime_power(q)) out.push_back(q);
  return out;
}

const std::uint64_t grid_primes[] = {5, 7, 11, 13};

Outcome macdonald_matches_valuation() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : grid_primes)
    for (int n = 0; n <= 30; ++n)
      ppcd::for_each_partition(n, [&](const Partition& lambda) {
        ++checked;
        if (ppcd::is_pprime_macdonald(lambda, p) != ppcd::is_pprime_oracle(lambda, p))
          o.fail("disagree at " + ppcd::to_string(lambda) + " p=" + std::to_string(p));
      });
  if (o.ok) o.detail = std::to_string(checked) + " (partition, p) pairs";
  return o;
}

Outcome counting_formula() {
  Outcome o;
  for (std::uint64_t p : grid_primes)
    for (int n = 1; n <= 2000; ++n) {
      const auto filter = ppcd::pprime_hook_legs(n, p);
      const auto layered = ppcd::layered_pprime_hook_legs(n, p);
      if (ppcd::count_pprime_hooks_formula(n, p) != filter.size() || layered != filter)
        o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  if (o.ok) o.detail = "n <= 2000, p in {5,7,11,13}";
  return o;
}

Outcome an_bound() {
  Outcome o;
  for (std::uint64_t p : grid_primes) {
    for (int n = 7; n <= 100; ++n)
      if (!ppcd::verify_An_bound(n, p).ok)
        o.fail("verify_An_bound n=" + std::to_string(n) + " p=" + std::to_string(p));
    for (int n = 5; n <= 40; ++n) {
      const auto ext = ppcd::ext_pprime_degree_set(n, p, 40);
      if (!ext.exact || ext.degrees.size() < ppcd::halved_count_lower_bound(n, p))
        o.fail("halved bound n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  if (o.ok) o.detail = "7 <= n <= 100 witnesses; exact sets for 5 <= n <= 40";
  return o;
}

Outcome quasihooks() {
  Outcome o;
  for (int c : {2, 3})
    for (int n = 4 + c; n <= 200; ++n)
      for (int t = 0; t <= ppcd::quasihook_monotone_t_max(n, c); ++t)
        if (!ppcd::quasihook_monotone(n, c, t))
          o.fail("n=" + std::to_string(n) + " c=" + std::to_string(c) + " t=" + std::to_string(t));
  const Partition a{6, 5, 1, 1}, b{5, 5, 1, 1, 1};
  if (ppcd::degree_increases(a, b))
    o.fail("(6,5,1,1) -> (5,5,1,1,1) did not break monotonicity");
  if (o.ok)
    o.detail = "deg(6,5,1,1)=" + ppcd::degree(a).str() + " > deg(5,5,1,1,1)=" +
               ppcd::degree(b).str();
  return o;
}

Outcome sum_of_squares() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    Natural total = 0;
    ppcd::for_each_partition(n, [&](const Partition& lambda) {
      const Natural d = ppcd::degree(lambda);
      total += d * d;
    });
    if (total != ppcd::factorial(static_cast<std::uint64_t>(n))) o.fail("n=" + std::to_string(n));
  }
  for (auto [name, order] : {std::pair{"A5", 60}, {"S5", 120}, {"A6", 360}}) {
    try {
      const auto t = ppcd::ctbl::bundled_table(name);
      if (!t.order || *t.order != order || ppcd::ctbl::sum_of_squares(t) != order)
        o.fail(std::string("table ") + name);
    } catch (const std::exception& e) {
      o.fail(std::string("table ") + name + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "n <= 12; A5, S5, A6";
  return o;
}

Outcome lie_grid() {
  using namespace ppcd::lie;
  Outcome o;
  std::size_t rows = 0;
  const Family families[] = {Family::A, Family::A2, Family::B,  Family::C,
                             Family::B2even, Family::D, Family::D4, Family::D2};
  for (Family f : families) {
    const auto [lo, hi] = rank_range(f);
    for (unsigned n = lo; n <= (hi ? hi : 10u); ++n)
      for (std::uint64_t q : prime_powers_to(27)) {
        if (!row_applies(f, n, q)) continue;
        for (std::uint64_t p : primes_in(5, 97)) {
          if (q % p == 0) continue;
          ++rows;
          if (!not_both_divisible(f, n, q, p))
            o.fail(std::string(to_string(f)) + " n=" + std::to_string(n) + " q=" +
                   std::to_string(q) + " p=" + std::to_string(p));
        }
      }
  }
  if (o.ok) o.detail = std::to_string(rows) + " (family, n, q, p) rows";
  return o;
}

Outcome semisimple_closed_forms() {
  using namespace ppcd::lie;
  Outcome o;
  auto spec = [](std::initializer_list<CentralizerFactor> fs) { return CentralizerSpec{fs}; };
  for (std::uint64_t q : prime_powers_to(49)) {
    const std::uint64_t r = ppcd::prime_power_base(q);
    const Natural Q = q;
    auto expect = [&](const Natural& got, const Natural& want, const char* what) {
      if (got != want) o.fail(std::string(what) + " q=" + std::to_string(q));
    };
    expect(semisimple_degree(2, 1, q, r, spec({{1, 1, 1}, {1, 1, 1}})), Q + 1, "GL1(q)^2");
    expect(semisimple_degree(2, 1, q, r, spec({{1, 1, 2}})), Q - 1, "GL1(q^2)");
    for (int eps : {1, -1}) {
      const Natural middle = Q * Q + eps * Q + 1;
      expect(semisimple_degree(3, eps, q, r, spec({{1, eps, 1}, {1, eps, 1}, {1, eps, 1}})),
             (Q + eps) * middle, eps == 1 ? "GL1(q)^3" : "GU1(q)^3");
      expect(semisimple_degree(3, eps, q, r, spec({{1, 1, 2}, {1, eps, 1}})), (Q - eps) * middle,
             eps == 1 ? "GL1(q^2) x GL1(q)" : "GL1(q^2) x GU1(q)");
    }
  }
  if (o.ok) o.detail = "all prime powers q <= 49, eps = +1 and -1";
  return o;
}

Outcome exceptional_pairs() {
  using namespace ppcd::lie;
  Outcome o;
  const GroupSpec groups[] = {{Family::PSL2, 2, 1}, {Family::PSL3e, 3, 1},
                              {Family::PSL3e, 3, -1}, {Family::PSp4, 2, 1},
                              {Family::Suzuki, 0, 1}, {Family::Ree2G2, 0, 1},
                              {Family::G2, 0, 1},   {Family::F4, 0, 1},
                              {Family::D4_3, 0, 1}};
  std::size_t records = 0;
  for (const auto& g : groups)
    for (std::uint64_t q : prime_powers_to(128))
      for (std::uint64_t p : primes_in(5, 97)) {
        PairRecord rec;
        try {
          rec = exceptional_pair(g, q, p);
        } catch (const ppcd::precondition_error&) {
          continue;  // outside the family's parameter range
        }
        ++records;
        if (!nondivisibility_check(rec))
          o.fail(std::string(to_string(g.family)) + " eps=" + std::to_string(g.epsilon) +
                 " q=" + std::to_string(q) + " p=" + std::to_string(p) + " degrees " +
                 rec.chi1.degree.str() + ", " + rec.chi2.degree.str());
      }
  if (o.ok) o.detail = std::to_string(records) + " valid (family, q, p) records";
  return o;
}

Outcome intro_examples() {
  using namespace ppcd::ctbl;
  Outcome o;
  const auto a5 = bundled_table("A5");
  for (std::uint64_t p : {2, 3, 5})
    if (cd_pprime(a5, p).size() != 3) o.fail("A5 p=" + std::to_string(p));
  if (cd_pprime(bundled_table("S5"), 2).size() != 2) o.fail("S5 p=2");
  for (std::uint64_t p : primes_in(7, 97))
    if (cd_pprime(pgl2_degree_set(p), p).size() != 3) o.fail("PGL2 p=" + std::to_string(p));
  if (o.ok) o.detail = "A5, S5, PGL2(p) for 7 <= p <= 97";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Macdonald criterion matches valuation oracle", 30, macdonald_matches_valuation},
      {2, "p'-hook count: formula = filter = layered", 10, counting_formula},
      {3, "A_n extendible p'-degree bound", 120, an_bound},
      {4, "quasihook monotonicity and its counterexample", 10, quasihooks},
      {5, "sum of squared degrees", 30, sum_of_squares},
      {6, "unipotent pairs never both divisible", 60, lie_grid},
      {7, "semisimple degree closed forms", 10, semisimple_closed_forms},
      {8, "exceptional pair nondivisibility", 30, exceptional_pairs},
      {9, "introductory degree-set sizes", 1, intro_examples},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds)
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
    failed += !o.ok;
    std::printf("%s criterion %d: %s (%.2fs) - %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
