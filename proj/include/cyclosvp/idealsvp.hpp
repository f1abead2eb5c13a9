#ifndef CYCLOSVP_IDEALSVP_HPP
#define CYCLOSVP_IDEALSVP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclosvp/integer.hpp"
#include "cyclosvp/lattice.hpp"
#include "cyclosvp/ntheory.hpp"
#include "cyclosvp/pell.hpp"
#include "cyclosvp/rings.hpp"

namespace cyclosvp {

/// Prime ideal (p, g(theta)) for a monic irreducible factor g of the ring's
/// defining polynomial mod p. All supported rings are monogenic, so these
/// are exactly the primes over p and N = p^deg(g).
struct PrimeIdeal {
  RingTag ring;
  Integer p;
  PolyModP factor;
  RingElement pi;
  std::optional<Integer> r;

  int residue_degree() const { return poly_degree(factor); }
  Integer norm() const;
  /// x reduces to 0 mod (p, g): the two-element membership test.
  bool contains(const RingElement& x) const;
  TwoElementIdeal two_element() const { return {p, pi, r}; }
  IntegerLattice lattice() const { return ideal_lattice(two_element()); }
};

PrimeIdeal prime_ideal_from_factor(const RingTag& ring, const Integer& p, const PolyModP& factor);
/// (p, theta - r); DomainError "not_an_ideal" unless f(r) = 0 mod p.
PrimeIdeal prime_ideal_from_root(const RingTag& ring, const Integer& p, const Integer& r);
/// Every prime ideal of the ring with norm <= bound, ordered by (p, factor).
std::vector<PrimeIdeal> prime_ideals_up_to(const RingTag& ring, const Integer& bound);

/// a^2 + d b^2 = p for d in {1, 2}; d = 1 returns a > b.
std::pair<Integer, Integer> cornacchia(const Integer& p, int d);

/// Smallest level n with a lambda_1 formula for the class of p.
int class_minimum_level(const ResidueClass& rc);

/// The prime ideal of the smallest subring where the construction for the
/// class of p lives, using the smallest root (or root_hint):
///   p = 1 mod 4 at n = 1:  Z[i],          (p, i - r),          r^2 = -1
///   p = 3 mod 8:           Z[zeta8],      (p, zeta + zeta^3 - r), r^2 = -2
///   p = 9 mod 16:          Z[zeta8],      (p, zeta - r),       r^4 = -1
///   p = 7 mod 16:          QuarticTheta,  (p, theta - r),      r^4 + 4r^2 + 2 = 0
///   p = 5 mod 8:           Z[i],          (p, i - r)
PrimeIdeal base_prime_ideal(const ResidueClass& rc, int n, std::optional<Integer> root_hint = std::nullopt);

/// (p, lift(pi)) in CycloPow2(n).
TwoElementIdeal extend(const PrimeIdeal& ideal, int n);

struct Lambda1Result {
  Integer p;
  int n = 0;
  ResidueClass residue_class;
  Integer lambda1_sq;
  SvpCertificate witness;
  /// Fourth powers of the two upper bounds on lambda_1.
  Integer bound_new_4th;
  /// Empty when N^(4/2^n) is not an integer (fallback classes only).
  std::optional<Integer> bound_minkowski_4th;
  std::optional<PellSolution> pell;
  /// p = 3 mod 8 at n = 1: (p) is inert in Z[i] and the ideal is (p).
  bool inert = false;
  /// p = 9 mod 16 at n = 1, or an enumeration fallback for 1, 15 mod 16.
  bool outside_formula = false;
  bool certified = false;
};

/// lambda_1^2 of the canonical prime ideal over p in CycloPow2(n), by class:
///   5 mod 8: 2^n p;  3 mod 8: 2^n p (n >= 2), 2 p^2 inert at n = 1;
///   9 mod 16: 2^n a_p (n >= 2), 2p at n = 1;  7 mod 16: 2^n a_p (n >= 3).
/// Enumeration confirms the value whenever 2^n <= max_enumeration_rank();
/// a disagreement throws ConsistencyError. Classes 1, 15 mod 16 throw
/// DomainError "class_not_covered" unless enumerate_fallback is set.
Lambda1Result lambda1_squared(const Integer& p, int n, std::optional<Integer> root_hint = std::nullopt,
                              bool enumerate_fallback = false);

/// Explicit witness built in the minimal subring (Cornacchia for 3, 5 mod 8,
/// rank-4 enumeration for 7, 9 mod 16) and lifted to CycloPow2(n).
SvpCertificate shortest_vector(const Integer& p, int n, std::optional<Integer> root_hint = std::nullopt);

/// 2 min(2 a_p^2 - p, 2 a_{-p}^2 + p); p = 1, 7 mod 8.
Integer lambda1_sq_zsqrt2(const Integer& p);
/// True when the first branch 2 a_p^2 - p is the smaller one.
bool zsqrt2_first_branch(const Integer& p);
/// Threshold form of the branch: a_p < sqrt((sqrt2 + 1) p / 2), decided
/// exactly as (2 a_p^2 - p)^2 < 2 p^2.
bool zsqrt2_threshold_branch(const Integer& p);

/// Any generator of a principal prime ideal: a vector of norm +-N(ideal)
/// among small combinations of the LLL basis, else among the shortest vectors.
RingElement find_generator(const PrimeIdeal& ideal);

/// Shortest generator: g * eps^m minimized over a window around the real
/// minimizer of f(m) = A eps^(2m) + B eps^(-2m), then walked to the integer
/// minimum (f is convex). Torsion units are isometries and are skipped.
SvpCertificate shortest_generator(const PrimeIdeal& ideal);
SvpCertificate shortest_generator(const Integer& p, const RingTag& ring, const Integer& r);

/// Lift the witness into CycloPow2(n), scaling sq_length by the degree
/// ratio. cross_checked is set only when enumeration at the target rank
/// confirms; a shorter vector there throws ConsistencyError.
SvpCertificate lift_shortest(const SvpCertificate& cert, int n);

struct Bounds {
  Integer p;
  int n = 0;
  Integer lambda1_sq;
  Integer new_bound_4th;
  Integer minkowski_4th;
  std::string lambda1_decimal;
  std::string new_bound_decimal;
  std::string minkowski_decimal;
  /// lambda1^4 < new_bound_4th < minkowski_4th.
  bool chain_holds = false;
};

/// 2^(2n+1) p for the new bound; 2^(4n) N^(4/2^n) for Minkowski, which is
/// 2^(4n) p whenever N = p^(2^(n-2)) (classes 7, 9 mod 16).
Bounds bounds(const Integer& p, int n);

struct SvsgEntry {
  Integer p;
  PolyModP factor;
  Integer norm;
  Integer enumeration_sq;
  Integer generator_sq;
  RingElement generator = RingElement::zero(RingTag::gaussian());
  /// lambda1_sq_zsqrt2 for degree-1 ideals of Z[sqrt2].
  std::optional<Integer> formula_sq;
  bool pass = false;
};

struct SvsgReport {
  RingTag ring;
  Integer norm_bound;
  std::vector<SvsgEntry> entries;
  int mismatches = 0;
};

/// For every prime ideal of norm <= norm_bound: enumeration lambda_1 versus
/// shortest-generator length. Rings: Z[i], Z[sqrt2], Z[zeta8], QuarticTheta.
SvsgReport svsg_verify(const RingTag& ring, const Integer& norm_bound);

struct Zeta16LiftReport {
  Integer p;
  Integer r;
  Integer a_p;
  Integer subfield_sq;
  Integer extension_sq;
  RingElement subfield_witness = RingElement::zero(RingTag::quartic_theta());
  RingElement lifted_witness = RingElement::zero(RingTag::cyclotomic(3));
  bool ratio_ok = false;
  bool witness_ok = false;
  bool formula_ok = false;
  bool pass = false;
};

/// Independent rank-4 and rank-8 enumerations for p = 7 mod 16.
Zeta16LiftReport zeta16_lift_check(const Integer& p);

}  // namespace cyclosvp

#endif  // CYCLOSVP_IDEALSVP_HPP
