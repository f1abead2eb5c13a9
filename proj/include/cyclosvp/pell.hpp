#ifndef CYCLOSVP_PELL_HPP
#define CYCLOSVP_PELL_HPP

#include "cyclosvp/integer.hpp"

namespace cyclosvp {

/// Minimal positive solution of a^2 - 2 b^2 = sign * p.
struct PellSolution {
  Integer p;
  int sign = 1;
  Integer a;
  Integer b;

  bool operator==(const PellSolution&) const = default;
};

/// The rank-2 lattice spanned by (p, p) and (r + sqrt2, r - sqrt2) in R^2,
/// i.e. the ideal (p, sqrt2 - r) of Z[sqrt2] under both real embeddings.
struct PellLattice {
  Integer r;
  IntMatrix gram;
  /// Unimodular U with U * gram * U^T Gauss-reduced.
  IntMatrix transform;
  /// Shortest vector u + v sqrt2 and its squared length 2u^2 + 4v^2.
  Integer u;
  Integer v;
  Integer sq_length;
};

PellLattice pell_lattice(const Integer& p, const Integer& r);

/// Lattice route: Gauss-reduce pell_lattice(p, sqrt_mod(2, p)) and read a_p
/// off the shortest vector; sign -1 goes through a_{-p} = a_p - 2 b_p and
/// b_{-p} = a_p - b_p. DomainError for p = 2, composite p, p = 3, 5 mod 8.
PellSolution solve_pell(const Integer& p, int sign = 1);

/// Exhaustive scan, independent of solve_pell. For sign +1 the scan also
/// asserts that the solution with a in [sqrt p, sqrt 2p] is unique.
PellSolution pell_oracle(const Integer& p, int sign = 1);

}  // namespace cyclosvp

#endif  // CYCLOSVP_PELL_HPP
