#ifndef CYCLOSVP_NTHEORY_HPP
#define CYCLOSVP_NTHEORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclosvp/integer.hpp"

namespace cyclosvp {

enum class Primality { Composite, Prime, ProbablePrime };

/// Miller-Rabin with the first twelve prime bases. Deterministic below 2^64
/// (in fact below 3.3e24); above 2^64 the answer is ProbablePrime with error
/// probability at most 4^-12 per composite.
Primality primality(const Integer& n);

/// Throws DomainError for n < 2.
bool is_prime(const Integer& n);

Integer powmod(const Integer& base, const Integer& exp, const Integer& m);

/// Legendre symbol (a/p) by Euler's criterion; p an odd prime.
int legendre(const Integer& a, const Integer& p);

/// Square root of a modulo an odd prime p, canonicalized to min(r, p - r).
/// Returns nullopt when a is a non-residue. a = 2 with p = 7 mod 8 uses the
/// closed form 2^((p+1)/4); everything else goes through Tonelli-Shanks.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);

/// One level of the splitting tower: (p) factors into `primes` prime ideals
/// of residue degree `residue_degree` in `field`. `relative` describes what
/// each prime of the field `over` does when extended to `field`.
struct SplittingLevel {
  std::string field;
  std::string over;
  int degree = 0;
  int primes = 0;
  int residue_degree = 0;
  std::string relative;

  std::string behaviour() const;
};

struct ResidueClass {
  Integer p;
  int class_mod8 = 0;
  int class_mod16 = 0;
  bool supported = false;
  std::vector<SplittingLevel> splitting;

  /// "3 mod 8", "5 mod 8", "7 mod 16", "9 mod 16" or "" when unsupported.
  std::string covered_class() const;
};

/// Throws DomainError for p = 2 (ramified) and for composite p.
ResidueClass classify_prime(const Integer& p);

// ---------------------------------------------------------------------------
// Polynomials over F_p, coefficients stored low degree first.

using PolyModP = std::vector<Integer>;

PolyModP poly_reduce(PolyModP f, const Integer& p);
int poly_degree(const PolyModP& f);
PolyModP poly_mul(const PolyModP& a, const PolyModP& b, const Integer& p);
PolyModP poly_rem(const PolyModP& a, const PolyModP& b, const Integer& p);
PolyModP poly_quo(const PolyModP& a, const PolyModP& b, const Integer& p);
PolyModP poly_gcd(PolyModP a, PolyModP b, const Integer& p);
Integer poly_eval(const PolyModP& f, const Integer& x, const Integer& p);

/// The distinct monic irreducible factors of f mod p, sorted by degree then
/// lexicographically by coefficients (low first). Deterministic.
std::vector<PolyModP> irreducible_factors(const PolyModP& f, const Integer& p);

/// Distinct roots of f mod p in [0, p), ascending.
std::vector<Integer> roots_mod(const PolyModP& f, const Integer& p);

}  // namespace cyclosvp

#endif  // CYCLOSVP_NTHEORY_HPP
