#include <gtest/gtest.h>

#include "cyclosvp/error.hpp"
#include "cyclosvp/ntheory.hpp"
#include "oracles.hpp"

namespace cyclosvp {
namespace {

TEST(Primality, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(89));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(is_prime(1), DomainError);
  EXPECT_THROW(is_prime(-7), DomainError);
}

TEST(Primality, MatchesTrialDivision) {
  for (std::int64_t n = 2; n < 100000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesAndLargeInputs) {
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(Integer("3215031751")));
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  EXPECT_FALSE(is_prime(Integer("318665857834031151167461")));
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  EXPECT_EQ(primality(Integer("18446744073709551557")), Primality::Prime);
  EXPECT_EQ(primality(Integer("170141183460469231731687303715884105727")), Primality::ProbablePrime);
  EXPECT_EQ(primality(Integer("170141183460469231731687303715884105729")), Primality::Composite);
}

TEST(SqrtMod, Examples) {
  EXPECT_EQ(*sqrt_mod(2, 7), 3);
  EXPECT_EQ(*sqrt_mod(2, 89), 25);
  for (int p : {3, 5, 7, 11, 13, 89, 1009}) EXPECT_EQ(*sqrt_mod(1, p), 1);
  EXPECT_FALSE(sqrt_mod(3, 7).has_value());
  EXPECT_THROW(sqrt_mod(0, 7), DomainError);
  EXPECT_THROW(sqrt_mod(2, 8), DomainError);
}

TEST(SqrtMod, EveryResidueOfSmallPrimes) {
  for (std::int64_t p : oracle::primes_below(400)) {
    if (p == 2) continue;
    for (std::int64_t a = 1; a < p; ++a) {
      const auto got = sqrt_mod(a, p);
      const auto want = oracle::sqrt_mod(a, p);
      ASSERT_EQ(got.has_value(), want.has_value()) << a << " mod " << p;
      if (want) {
        ASSERT_EQ(*got, *want) << a << " mod " << p;
        ASSERT_EQ(*got * *got % p, a);
      }
    }
  }
}

TEST(SqrtMod, ClosedFormForTwoBelow1e5) {
  for (std::int64_t p = 7; p < 100000; p += 8) {
    if (!oracle::is_prime(p)) continue;
    Integer r = powmod(2, (Integer(p) + 1) / 4, p);
    r = std::min(r, Integer(p) - r);
    ASSERT_EQ(*sqrt_mod(2, p), r) << p;
  }
}

TEST(SqrtMod, TonelliShanksOnLargePrime) {
  const Integer p("18446744073709551557");
  for (int a = 2; a < 60; ++a) {
    const auto r = sqrt_mod(a, p);
    if (r) {
      EXPECT_EQ(*r * *r % p, a);
      EXPECT_LE(*r, p - *r);
    } else {
      EXPECT_EQ(legendre(a, p), -1);
    }
  }
}

TEST(Classify, Examples) {
  const ResidueClass c89 = classify_prime(89);
  EXPECT_EQ(c89.class_mod16, 9);
  EXPECT_EQ(c89.class_mod8, 1);
  EXPECT_TRUE(c89.supported);
  ASSERT_EQ(c89.splitting.size(), 6u);
  // Z[sqrt2] splits, Z[zeta8] splits further, nothing splits above it.
  EXPECT_EQ(c89.splitting[1].field, "Q(sqrt2)");
  EXPECT_EQ(c89.splitting[1].relative, "splits");
  EXPECT_EQ(c89.splitting[2].field, "Q(zeta8)");
  EXPECT_EQ(c89.splitting[2].relative, "splits");
  EXPECT_EQ(c89.splitting[4].relative, "inert");
  EXPECT_EQ(c89.splitting[5].relative, "inert");

  const ResidueClass c13 = classify_prime(13);
  EXPECT_EQ(c13.class_mod8, 5);
  EXPECT_TRUE(c13.supported);

  const ResidueClass c31 = classify_prime(31);
  EXPECT_EQ(c31.class_mod16, 15);
  EXPECT_FALSE(c31.supported);
  EXPECT_EQ(c31.covered_class(), "");

  EXPECT_THROW(classify_prime(2), DomainError);
  EXPECT_THROW(classify_prime(91), DomainError);
}

TEST(Classify, SevenModSixteenTower) {
  // 7 splits in Z[sqrt2] and in Z[theta], and is inert from there to Z[zeta16].
  const ResidueClass c = classify_prime(7);
  EXPECT_EQ(c.splitting[1].relative, "splits");
  EXPECT_EQ(c.splitting[3].field, "Q(zeta16+zeta16^7)");
  EXPECT_EQ(c.splitting[3].relative, "splits");
  EXPECT_EQ(c.splitting[3].primes, 4);
  EXPECT_EQ(c.splitting[4].primes, 4);
  EXPECT_EQ(c.splitting[2].relative, "inert");
}

TEST(Classify, SupportedExhaustiveBelow1e4) {
  for (std::int64_t p = 3; p < 10000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    const ResidueClass c = classify_prime(p);
    ASSERT_EQ(c.class_mod8, p % 8);
    ASSERT_EQ(c.class_mod16, p % 16);
    ASSERT_EQ(c.class_mod16 % 8, c.class_mod8);
    const bool want = p % 8 == 3 || p % 8 == 5 || p % 16 == 7 || p % 16 == 9;
    ASSERT_EQ(c.supported, want) << p;
  }
}

TEST(Classify, PrimeCountsMatchRootCounts) {
  // For Z[zeta_2^(k+1)] the number of degree-1 primes equals the number of
  // roots of x^(2^k) + 1 mod p.
  for (std::int64_t p : oracle::primes_below(600)) {
    if (p == 2) continue;
    const ResidueClass c = classify_prime(p);
    const std::vector<std::pair<int, std::vector<std::int64_t>>> fields = {
        {0, {1, 0, 1}}, {1, {-2, 0, 1}}, {2, {1, 0, 0, 0, 1}}, {3, {2, 0, 4, 0, 1}}};
    for (const auto& [index, f] : fields) {
      const auto& level = c.splitting[static_cast<std::size_t>(index)];
      const std::size_t roots = oracle::roots_mod(f, p).size();
      ASSERT_EQ(level.residue_degree == 1 ? static_cast<std::size_t>(level.primes) : 0u, roots)
          << p << " " << level.field;
      ASSERT_EQ(level.primes * level.residue_degree, level.degree);
    }
  }
}

TEST(Polynomials, FactorsMultiplyBackAndAreIrreducible) {
  for (std::int64_t p : oracle::primes_below(200)) {
    for (const PolyModP& f : {PolyModP{1, 0, 0, 0, 1}, PolyModP{2, 0, 4, 0, 1},
                              PolyModP{1, 0, 0, 0, 0, 0, 0, 0, 1}}) {
      const auto factors = irreducible_factors(f, p);
      PolyModP prod{1};
      for (const auto& g : factors) {
        ASSERT_EQ(g.back(), 1);
        // Irreducible of degree > 1 means no roots; degree 2 and 3 suffice
        // here except for degree-4 factors of the degree-8 polynomial.
        if (poly_degree(g) <= 3) ASSERT_TRUE(poly_degree(g) == 1 || roots_mod(g, p).empty());
        prod = poly_mul(prod, g, p);
      }
      // f is squarefree mod odd p, so the product of distinct factors is f.
      if (p != 2) ASSERT_EQ(prod, poly_reduce(f, p)) << p;
    }
  }
}

TEST(Polynomials, RootsMatchScan) {
  for (std::int64_t p : oracle::primes_below(300)) {
    for (const std::vector<std::int64_t>& f :
         {std::vector<std::int64_t>{1, 0, 1}, {2, 0, 1}, {1, 0, 0, 0, 1}, {2, 0, 4, 0, 1}, {-2, 0, 1}}) {
      PolyModP g;
      for (auto c : f) g.emplace_back(c);
      const auto got = roots_mod(g, p);
      const auto want = oracle::roots_mod(f, p);
      ASSERT_EQ(got.size(), want.size()) << p;
      for (std::size_t i = 0; i < want.size(); ++i) ASSERT_EQ(got[i], want[i]);
    }
  }
}

TEST(Polynomials, RootsOfXFourPlusOneModEightyNine) {
  const auto roots = roots_mod({1, 0, 0, 0, 1}, 89);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_EQ(roots[0], 12);
  EXPECT_EQ(roots[1], 37);
  EXPECT_EQ(roots[2], 52);
  EXPECT_EQ(roots[3], 77);
  // 34 is a square root of -1, not a fourth root.
  EXPECT_EQ(powmod(34, 2, 89), 88);
  EXPECT_EQ(powmod(34, 4, 89), 1);
}

}  // namespace
}  // namespace cyclosvp
