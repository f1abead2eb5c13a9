#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cyclosvp/error.hpp"
#include "cyclosvp/lattice.hpp"
#include "cyclosvp/linalg.hpp"
#include "cyclosvp/ntheory.hpp"
#include "oracles.hpp"

namespace cyclosvp {
namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Cofactor expansion, for small matrices only.
Integer laplace_det(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const Integer term = m(0, j) * laplace_det(minor);
    sum += j % 2 == 0 ? term : Integer(-term);
  }
  return sum;
}

// Independent Gram-Schmidt over the rationals, straight from the definition.
void gram_schmidt(const IntMatrix& gram, std::vector<Rational>& bstar, Matrix<Rational>& mu) {
  const Eigen::Index n = gram.rows();
  Matrix<Rational> g = gram.cast<Rational>();
  mu = Matrix<Rational>::Identity(n, n);
  bstar.assign(static_cast<std::size_t>(n), Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * bstar[static_cast<std::size_t>(k)];
      mu(i, j) = s / bstar[static_cast<std::size_t>(j)];
    }
    Rational s = g(i, i);
    for (Eigen::Index k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[static_cast<std::size_t>(k)];
    bstar[static_cast<std::size_t>(i)] = s;
  }
}

TEST(Linalg, BareissMatchesCofactorExpansion) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 5;
    const IntMatrix m = random_matrix(rng, n, n, 20);
    ASSERT_EQ(bareiss_determinant(m), laplace_det(m));
  }
  IntMatrix singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  EXPECT_EQ(bareiss_determinant(singular), 0);
}

TEST(Linalg, HermiteNormalFormProperties) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 4;
    const IntMatrix gens = random_matrix(rng, d + 2, d, 15);
    IntMatrix h;
    try {
      h = hermite_normal_form(gens);
    } catch (const DomainError&) {
      continue;
    }
    ASSERT_EQ(h.rows(), d);
    for (int i = 0; i < d; ++i) {
      ASSERT_GT(h(i, i), 0);
      for (int j = i + 1; j < d; ++j) ASSERT_EQ(h(i, j), 0);
      for (int j = 0; j < i; ++j) {
        ASSERT_GE(h(i, j), 0);
        ASSERT_LT(h(i, j), h(j, j));
      }
    }
    // Same lattice: every generator lies in span(h), and h's rows lie in
    // span(gens) because the HNF is idempotent on any basis of the lattice.
    for (int i = 0; i < gens.rows(); ++i) {
      RowVector<Integer> x;
      ASSERT_TRUE(solve_lower_triangular(h, RowVector<Integer>(gens.row(i)), &x));
      ASSERT_EQ(RowVector<Integer>(x * h), RowVector<Integer>(gens.row(i)));
    }
    IntMatrix both(gens.rows() + d, d);
    both << gens, h;
    ASSERT_EQ(hermite_normal_form(both), h);
  }
  IntMatrix low(2, 3);
  low << 1, 0, 0, 0, 1, 0;
  EXPECT_THROW(hermite_normal_form(low), DomainError);
}

TEST(Linalg, LllSatisfiesSizeAndLovaszConditions) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 150; ++t) {
    const int d = 2 + t % 6;
    const IntMatrix b = random_matrix(rng, d, d, 30);
    if (bareiss_determinant(b) == 0) continue;
    const IntMatrix gram = b * b.transpose();
    const IntMatrix u = lll_reduce_gram(gram);
    const Integer det = bareiss_determinant(u);
    ASSERT_TRUE(det == 1 || det == -1);
    const IntMatrix reduced = u * gram * u.transpose();
    std::vector<Rational> bstar;
    Matrix<Rational> mu;
    gram_schmidt(reduced, bstar, mu);
    for (int i = 1; i < d; ++i) {
      for (int j = 0; j < i; ++j) ASSERT_LE(abs(mu(i, j)), Rational(1, 2));
      const Rational lhs = bstar[static_cast<std::size_t>(i)];
      const Rational rhs = (Rational(99, 100) - mu(i, i - 1) * mu(i, i - 1)) * bstar[static_cast<std::size_t>(i - 1)];
      ASSERT_GE(lhs, rhs);
    }
  }
}

TEST(Linalg, GaussReductionIsReduced) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    const IntMatrix b = random_matrix(rng, 2, 2, 1000);
    if (bareiss_determinant(b) == 0) continue;
    const IntMatrix gram = b * b.transpose();
    const IntMatrix u = gauss_reduce_gram(gram);
    const IntMatrix r = u * gram * u.transpose();
    ASSERT_LE(2 * abs(r(0, 1)), r(0, 0));
    ASSERT_LE(r(0, 0), r(1, 1));
    ASSERT_EQ(bareiss_determinant(r), bareiss_determinant(gram));
  }
}

TEST(Linalg, FinckePohstMatchesBoxSearch) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 3;
    const IntMatrix b = random_matrix(rng, d, d, 6);
    if (bareiss_determinant(b) == 0) continue;
    const IntMatrix gram = b * b.transpose();
    // Any x with x^T G x <= R has |x_i| <= sqrt(R * (G^-1)_ii).
    const Integer radius = gram.diagonal().minCoeff();
    const Eigen::MatrixXd inv = gram.cast<double>().inverse();
    std::vector<int> half(static_cast<std::size_t>(d));
    long long boxes = 1;
    for (int i = 0; i < d; ++i) {
      half[static_cast<std::size_t>(i)] = static_cast<int>(std::sqrt(radius.convert_to<double>() * inv(i, i)) + 1);
      boxes *= 2 * half[static_cast<std::size_t>(i)] + 1;
    }
    if (boxes > 3000000) continue;
    Integer best = -1;
    int hits = 0;
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = -half[static_cast<std::size_t>(i)];
    for (;;) {
      IntVector x(d);
      bool zero = true;
      for (int i = 0; i < d; ++i) {
        x(i) = c[static_cast<std::size_t>(i)];
        zero = zero && c[static_cast<std::size_t>(i)] == 0;
      }
      if (!zero) {
        const Integer len = (x.transpose() * gram * x)(0, 0);
        if (best < 0 || len < best) {
          best = len;
          hits = 0;
        }
        if (len == best) ++hits;
      }
      int i = 0;
      while (i < d && c[static_cast<std::size_t>(i)] == half[static_cast<std::size_t>(i)]) {
        c[static_cast<std::size_t>(i)] = -half[static_cast<std::size_t>(i)];
        ++i;
      }
      if (i == d) break;
      ++c[static_cast<std::size_t>(i)];
    }
    const auto sv = fincke_pohst(gram, radius);
    ASSERT_EQ(sv.sq_length, best);
    ASSERT_EQ(static_cast<int>(sv.coords.size()) * 2, hits);
    for (const auto& v : sv.coords) {
      Eigen::Index last = d - 1;
      while (v(last) == 0) --last;
      ASSERT_GT(v(last), 0);
    }
  }
}

TEST(Linalg, FinckePohstRadiusHandling) {
  IntMatrix g(2, 2);
  g << 4, 1, 1, 9;
  EXPECT_THROW(fincke_pohst(g, Integer(3)), RadiusExhausted);
  EXPECT_EQ(fincke_pohst(g, Integer(4)).sq_length, 4);
  // Monotone: a larger radius never changes the answer.
  for (int r = 4; r < 40; ++r) ASSERT_EQ(fincke_pohst(g, Integer(r)).sq_length, 4);
  IntMatrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  EXPECT_THROW(fincke_pohst(indefinite, Integer(10)), DomainError);
  IntMatrix one(1, 1);
  one << 7;
  const auto sv = fincke_pohst(one, Integer(7));
  EXPECT_EQ(sv.sq_length, 7);
  ASSERT_EQ(sv.coords.size(), 1u);
  EXPECT_EQ(sv.coords[0](0), 1);
}

TEST(Lattice, PrimeIdealGramFrozen) {
  // (7, sqrt2 - 4) in Z[sqrt2].
  const IntegerLattice L = prime_ideal_lattice(RingTag::quad_sqrt2(), 7, 4);
  IntMatrix gram(2, 2);
  gram << 98, 42, 42, 22;
  EXPECT_EQ(L.gram, gram);
  EXPECT_EQ(gram_determinant(L), 2 * 4 * 49);
  const IntegerLattice R = gauss_reduce(L);
  EXPECT_EQ(R.gram(0, 0), 18);
}

TEST(Lattice, CovolumeIsNormTimesDiscriminant) {
  for (std::int64_t p : oracle::primes_below(200)) {
    if (p == 2) continue;
    for (const RingTag& ring : {RingTag::gaussian(), RingTag::quad_sqrt2(), RingTag::cyclo_eighth(), RingTag::quartic_theta()}) {
      std::vector<std::int64_t> f;
      for (const Integer& c : ring.defining_polynomial()) f.push_back(c.convert_to<std::int64_t>());
      for (std::int64_t r : oracle::roots_mod(f, p)) {
        const IntegerLattice L = prime_ideal_lattice(ring, p, r);
        ASSERT_EQ(gram_determinant(L), bareiss_determinant(canonical_form(ring)) * p * p);
        for (int i = 0; i < L.rank(); ++i) ASSERT_TRUE(oracle::vanishes_at(L.element(i), r, p));
      }
    }
  }
}

TEST(Lattice, RejectsNonRoot) {
  try {
    prime_ideal_lattice(RingTag::cyclo_eighth(), 89, 34);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "not_an_ideal");
    EXPECT_EQ(e.details().at("residue"), (34LL * 34 * 34 * 34 + 1) % 89);
  }
}

TEST(Lattice, MembershipAgreesWithEvaluation) {
  std::mt19937_64 rng(12);
  const IntegerLattice L = prime_ideal_lattice(RingTag::cyclo_eighth(), 89, 12);
  std::uniform_int_distribution<int> dist(-100, 100);
  for (int t = 0; t < 2000; ++t) {
    const RingElement x = RingElement::from_coeffs(L.ring, {dist(rng), dist(rng), dist(rng), dist(rng)});
    ASSERT_EQ(contains(L, x), oracle::vanishes_at(x, 12, 89));
  }
}

TEST(Lattice, ShortestVectorMatchesBoxOracle) {
  for (std::int64_t p : oracle::primes_below(120)) {
    if (p == 2) continue;
    for (const RingTag& ring : {RingTag::gaussian(), RingTag::quad_sqrt2(), RingTag::cyclo_eighth(), RingTag::quartic_theta()}) {
      std::vector<std::int64_t> f;
      for (const Integer& c : ring.defining_polynomial()) f.push_back(c.convert_to<std::int64_t>());
      const auto roots = oracle::roots_mod(f, p);
      if (roots.empty()) continue;
      const std::int64_t r = roots.front();
      const IntegerLattice L = prime_ideal_lattice(ring, p, r);
      const SvpCertificate cert = svp_shortest(L);
      ASSERT_TRUE(contains(L, cert.vector));
      ASSERT_EQ(canonical_sq_length(cert.vector), cert.sq_length);
      const auto want = oracle::shortest_in_box(
          ring, [&](const RingElement& x) { return oracle::vanishes_at(x, r, p); },
          cert.sq_length.convert_to<long long>());
      ASSERT_TRUE(want.has_value());
      ASSERT_EQ(cert.sq_length, *want) << ring.name() << " " << p;
    }
  }
}

TEST(Lattice, CanonicalChoiceTieBreak) {
  const RingTag z = RingTag::gaussian();
  const RingElement a = RingElement::from_coeffs(z, {3, 2});
  const RingElement b = RingElement::from_coeffs(z, {2, -3});
  const RingElement c = RingElement::from_coeffs(z, {-2, 3});
  EXPECT_EQ(canonical_choice({a, b, c}), b);
  EXPECT_EQ(canonical_choice({c}), b);
  EXPECT_EQ(canonical_choice({RingElement::from_coeffs(z, {0, -5})}), RingElement::from_coeffs(z, {0, 5}));
}

TEST(Lattice, EnumerationIsDeterministic) {
  const IntegerLattice L = prime_ideal_lattice(RingTag::cyclotomic(3), 17, *roots_mod({1, 0, 0, 0, 0, 0, 0, 0, 1}, 17).begin());
  const SvpCertificate a = svp_shortest(L);
  const SvpCertificate b = svp_shortest(L, Integer(10000));
  EXPECT_EQ(a.vector, b.vector);
  EXPECT_EQ(a.sq_length, b.sq_length);
  EXPECT_EQ(a.method, SvpMethod::Enumeration);
}

TEST(Lattice, RadiusExhaustionAndCaps) {
  const IntegerLattice L = prime_ideal_lattice(RingTag::gaussian(), 13, 5);
  EXPECT_THROW(svp_enumerate(L, Integer(25)), RadiusExhausted);
  EXPECT_EQ(svp_enumerate(L, Integer(26)).sq_length, 26);
  // Starting below the minimum still succeeds by doubling.
  EXPECT_EQ(svp_shortest(L, Integer(8)).sq_length, 26);
  EXPECT_THROW(svp_shortest(L, Integer(1)), RadiusExhausted);
  EXPECT_THROW(gauss_reduce(prime_ideal_lattice(RingTag::cyclo_eighth(), 17, 2)), DomainError);
  EXPECT_THROW(lll_reduce(L, 1, 4), DomainError);
  EXPECT_EQ(max_enumeration_rank(), 16);
}

}  // namespace
}  // namespace cyclosvp
