#include <gtest/gtest.h>

#include "cyclosvp/error.hpp"
#include "cyclosvp/ntheory.hpp"
#include "cyclosvp/pell.hpp"
#include "oracles.hpp"

namespace cyclosvp {
namespace {

TEST(Pell, FrozenValues) {
  struct Row {
    int p, a, b, am, bm;
  };
  // a^2 - 2b^2 = p and a^2 - 2b^2 = -p, minimal positive solutions.
  const Row rows[] = {{7, 3, 1, 1, 2},   {17, 5, 2, 1, 3},  {23, 5, 1, 3, 4},  {31, 7, 3, 1, 4},
                      {41, 7, 2, 3, 5},  {47, 7, 1, 5, 6},  {71, 11, 5, 1, 6}, {73, 9, 2, 5, 7},
                      {89, 11, 4, 3, 7}, {97, 13, 6, 1, 7}};
  for (const Row& row : rows) {
    const PellSolution plus = solve_pell(row.p, 1);
    EXPECT_EQ(plus.a, row.a) << row.p;
    EXPECT_EQ(plus.b, row.b) << row.p;
    const PellSolution minus = solve_pell(row.p, -1);
    EXPECT_EQ(minus.a, row.am) << row.p;
    EXPECT_EQ(minus.b, row.bm) << row.p;
  }
}

TEST(Pell, MatchesDoubleLoopBelow5000) {
  for (std::int64_t p : oracle::primes_below(5000)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    for (int sign : {1, -1}) {
      const auto want = oracle::pell(p, sign, 200);
      ASSERT_TRUE(want.has_value()) << p;
      const PellSolution got = solve_pell(p, sign);
      ASSERT_EQ(got.a, want->first) << p << " " << sign;
      ASSERT_EQ(got.b, want->second) << p << " " << sign;
    }
  }
}

TEST(Pell, LatticeRouteMatchesScanOracle) {
  for (std::int64_t p : oracle::primes_below(20000)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    ASSERT_EQ(solve_pell(p, 1), pell_oracle(p, 1)) << p;
    ASSERT_EQ(solve_pell(p, -1), pell_oracle(p, -1)) << p;
  }
}

TEST(Pell, SolutionsSatisfyEquationAndWindow) {
  for (std::int64_t p : oracle::primes_below(50000)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    const PellSolution s = solve_pell(p);
    ASSERT_EQ(s.a * s.a - 2 * s.b * s.b, p);
    // sqrt(p) < a_p < sqrt(2p).
    ASSERT_GT(s.a * s.a, p);
    ASSERT_LT(s.a * s.a, 2 * p);
    ASSERT_GT(s.b, 0);
    const PellSolution m = solve_pell(p, -1);
    ASSERT_EQ(m.a * m.a - 2 * m.b * m.b, -p);
    ASSERT_EQ(m.a, s.a - 2 * s.b < 0 ? -(s.a - 2 * s.b) : s.a - 2 * s.b);
  }
}

TEST(Pell, ShortVectorOfTheLattice) {
  // 89: sqrt2 = 25 mod 89. The -89 solution 3 + 7 sqrt2 (214) beats the
  // +89 solution 11 + 4 sqrt2 (306).
  const PellLattice L = pell_lattice(89, 25);
  EXPECT_EQ(L.sq_length, 2 * 3 * 3 + 4 * 7 * 7);
  EXPECT_EQ(2 * L.u * L.u + 4 * L.v * L.v, L.sq_length);
  EXPECT_EQ(L.u * L.u - 2 * L.v * L.v, L.u * L.u > 2 * L.v * L.v ? 89 : -89);
  const IntMatrix reduced = L.transform * L.gram * L.transform.transpose();
  EXPECT_EQ(reduced(0, 0), L.sq_length);
  EXPECT_LE(2 * (reduced(0, 1) < 0 ? -reduced(0, 1) : reduced(0, 1)), reduced(0, 0));
  EXPECT_LE(reduced(0, 0), reduced(1, 1));
}

TEST(Pell, Errors) {
  EXPECT_THROW(solve_pell(2), DomainError);
  EXPECT_THROW(solve_pell(13), DomainError);
  EXPECT_THROW(solve_pell(11), DomainError);
  EXPECT_THROW(solve_pell(91), DomainError);
  EXPECT_THROW(solve_pell(89, 0), DomainError);
  try {
    solve_pell(13);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "equation_unsolvable");
    EXPECT_EQ(e.details().at("class_mod8"), 5);
  }
}

}  // namespace
}  // namespace cyclosvp
