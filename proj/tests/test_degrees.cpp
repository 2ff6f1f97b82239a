#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ppcd/degrees.hpp"

using ppcd::Natural;
using ppcd::Partition;

TEST(Degree, Examples) {
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(ppcd::degree(Partition{n}), 1);
  EXPECT_EQ(ppcd::degree(Partition{2, 1}), 2);
  EXPECT_EQ(ppcd::degree(Partition{3, 1, 1}), 6);
  EXPECT_EQ(ppcd::degree(Partition{5, 2}), 14);
  EXPECT_EQ(ppcd::degree(Partition{2, 2, 1}), 5);
  EXPECT_EQ(ppcd::degree(Partition{3, 2, 1}), 16);
  EXPECT_EQ(ppcd::degree(Partition{}), 1);
}

TEST(Degree, HookDegree) {
  EXPECT_EQ(ppcd::hook_degree(9, 0), 1);
  EXPECT_EQ(ppcd::hook_degree(7, 2), 15);
  EXPECT_EQ(ppcd::hook_degree(5, 1), 4);
  EXPECT_THROW(ppcd::hook_degree(5, 5), ppcd::precondition_error);
  EXPECT_THROW(ppcd::hook_degree(5, -1), ppcd::precondition_error);
  for (int n = 1; n <= 60; ++n)
    for (int x = 0; x < n; ++x)
      ASSERT_EQ(ppcd::hook_degree(n, x), ppcd::degree(ppcd::hook_partition(n, x)));
}

TEST(Degree, Valuation) {
  EXPECT_EQ(ppcd::degree_valuation(Partition{9}, 5), 0u);
  EXPECT_EQ(ppcd::degree_valuation(Partition{3, 1, 1}, 5), 0u);
  EXPECT_EQ(ppcd::degree_valuation(Partition{5, 2}, 5), 0u);
  EXPECT_EQ(ppcd::degree_valuation(Partition{2, 2, 1}, 5), 1u);
  EXPECT_THROW(ppcd::degree_valuation(Partition{2, 1}, 6), ppcd::precondition_error);
}

TEST(Degree, PPrimeExamples) {
  for (auto* test : {&ppcd::is_pprime_macdonald, &ppcd::is_pprime_oracle}) {
    EXPECT_TRUE(test(Partition{4, 1}, 5));
    EXPECT_TRUE(test(Partition{3, 1, 1}, 5));
    EXPECT_FALSE(test(Partition{2, 2, 1}, 5));
  }
  EXPECT_THROW(ppcd::is_pprime_macdonald(Partition{2, 1}, 9), ppcd::precondition_error);
}

TEST(Degree, AlternatingRestriction) {
  EXPECT_EQ(ppcd::an_degrees(Partition{4, 1}), (std::vector<Natural>{4}));
  EXPECT_EQ(ppcd::an_degrees(Partition{3, 1, 1}), (std::vector<Natural>{3, 3}));
  EXPECT_EQ(ppcd::an_degrees(Partition{3, 2, 1}), (std::vector<Natural>{8, 8}));
  EXPECT_THROW(ppcd::an_degrees(Partition{1}), ppcd::precondition_error);
}

// |A_n| = n!/2 counted through the restricted constituents, each pair
// {lambda, lambda'} contributing once.
TEST(Degree, AlternatingSumOfSquares) {
  for (int n = 2; n <= 10; ++n) {
    Natural total = 0;
    ppcd::for_each_partition(n, [&](const Partition& lambda) {
      const auto mu = ppcd::conjugate(lambda);
      if (mu < lambda) return;
      for (const auto& d : ppcd::an_degrees(lambda)) total += d * d;
    });
    EXPECT_EQ(total * 2, oracle::factorial(static_cast<unsigned>(n))) << "n=" << n;
  }
}

TEST(DegreeProperty, MatchesTableauCount) {
  for (int n = 0; n <= 20; ++n)
    ppcd::for_each_partition(n, [&](const Partition& lambda) {
      ASSERT_EQ(ppcd::degree(lambda), oracle::tableaux(lambda.parts())) << lambda;
    });
}

TEST(DegreeProperty, ConjugateInvariant) {
  for (int n = 0; n <= 30; ++n)
    ppcd::for_each_partition(n, [&](const Partition& lambda) {
      ASSERT_EQ(ppcd::degree(lambda), ppcd::degree(ppcd::conjugate(lambda)));
    });
}

TEST(DegreeProperty, SumOfSquaresIsFactorial) {
  for (int n = 0; n <= 12; ++n) {
    Natural total = 0;
    ppcd::for_each_partition(n, [&](const Partition& lambda) {
      const Natural d = ppcd::degree(lambda);
      total += d * d;
    });
    EXPECT_EQ(total, oracle::factorial(static_cast<unsigned>(n))) << "n=" << n;
  }
}

TEST(DegreeProperty, ValuationMatchesBigIntegerDegree) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int n = 1; n <= 18; ++n)
      ppcd::for_each_partition(n, [&](const Partition& lambda) {
        ASSERT_EQ(ppcd::degree_valuation(lambda, p), oracle::valuation(ppcd::degree(lambda), p));
      });
}

TEST(DegreeProperty, MacdonaldMatchesValuation) {
  for (std::uint64_t p : {5, 7, 11, 13})
    for (int n = 0; n <= 30; ++n)
      ppcd::for_each_partition(n, [&](const Partition& lambda) {
        ASSERT_EQ(ppcd::is_pprime_macdonald(lambda, p), ppcd::is_pprime_oracle(lambda, p))
            << lambda << " p=" << p;
      });
}

TEST(DegreeProperty, MacdonaldSmallPrimes) {
  for (std::uint64_t p : {2, 3})
    for (int n = 0; n <= 22; ++n)
      ppcd::for_each_partition(n, [&](const Partition& lambda) {
        ASSERT_EQ(ppcd::is_pprime_macdonald(lambda, p), ppcd::is_pprime_oracle(lambda, p))
            << lambda << " p=" << p;
      });
}

// Cell-by-cell check on hooks; the Legendre filter is run up to 2000 in the
// hook enumeration tests.
TEST(DegreeProperty, HooksFollowLucas) {
  for (std::uint64_t p : {5, 7, 11, 13})
    for (int n = 1; n <= 300; ++n) {
      const auto top = static_cast<std::uint64_t>(n - 1);
      for (int x = 0; x < n; ++x)
        ASSERT_EQ(ppcd::is_pprime_oracle(ppcd::hook_partition(n, x), p),
                  oracle::binomial_prime_to(top, static_cast<std::uint64_t>(x), p))
            << "n=" << n << " x=" << x << " p=" << p;
    }
}

// Hooks below the diagonal have pairwise distinct degrees.
TEST(DegreeProperty, HookDegreesInjectiveOnHalf) {
  for (int n = 1; n <= 200; ++n) {
    std::set<Natural> seen;
    for (int x = 0; x <= (n - 1) / 2; ++x)
      ASSERT_TRUE(seen.insert(ppcd::hook_degree(n, x)).second) << "n=" << n << " x=" << x;
  }
}
