#ifndef CYCLOSVP_LATTICE_HPP
#define CYCLOSVP_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclosvp/integer.hpp"
#include "cyclosvp/rings.hpp"

namespace cyclosvp {

/// The ideal p*O + pi*O.
struct TwoElementIdeal {
  Integer p;
  RingElement pi;
  /// Root r when pi is (generator - r); informational only.
  std::optional<Integer> r;
};

/// Full-rank sublattice of a ring, rows of `basis` are coefficient vectors.
struct IntegerLattice {
  RingTag ring;
  IntMatrix basis;
  /// gram(i, j) = canonical_inner(basis_i, basis_j).
  IntMatrix gram;
  /// Accumulated unimodular transform from the construction basis.
  IntMatrix transform;
  std::optional<TwoElementIdeal> ideal;

  int rank() const { return static_cast<int>(basis.rows()); }
  RingElement element(int i) const;
  /// sum_i coords(i) * basis_i.
  RingElement combination(const IntVector& coords) const;
};

IntMatrix gram_matrix(const RingTag& ring, const IntMatrix& basis);

IntegerLattice make_lattice(const RingTag& ring, const IntMatrix& basis,
                            std::optional<TwoElementIdeal> ideal = std::nullopt);

/// Z-span of {g * b_j} over the generators g and power-basis elements b_j,
/// in Hermite normal form.
IntegerLattice ideal_lattice(const RingTag& ring, const std::vector<RingElement>& generators);
IntegerLattice ideal_lattice(const TwoElementIdeal& ideal);

/// (p, theta - r) for theta the ring's power-basis generator. Throws
/// DomainError "not_an_ideal" (detail "residue" = f(r) mod p) when r is not
/// a root of the defining polynomial modulo p.
IntegerLattice prime_ideal_lattice(const RingTag& ring, const Integer& p, const Integer& r);

/// Membership by exact triangular solve against the HNF.
bool contains(const IntegerLattice& lattice, const RingElement& x);

/// Determinant of the Gram matrix.
Integer gram_determinant(const IntegerLattice& lattice);

/// Lagrange-Gauss reduction; rank 2 only.
IntegerLattice gauss_reduce(const IntegerLattice& lattice);
IntegerLattice lll_reduce(const IntegerLattice& lattice, long delta_num = 99, long delta_den = 100);

enum class SvpMethod { AnalyticFormula, Enumeration, GeneratorSearch };
std::string to_string(SvpMethod method);

struct SvpCertificate {
  RingElement vector = RingElement::zero(RingTag::gaussian());
  Integer sq_length;
  SvpMethod method = SvpMethod::Enumeration;
  bool cross_checked = false;
  /// The ideal the vector was certified in, when known.
  std::optional<TwoElementIdeal> ideal;
  std::uint64_t nodes = 0;
};

/// Rank cap for enumeration: CYCLOSVP_MAX_RANK, default 16.
int max_enumeration_rank();

/// Canonical representative: each candidate is sign-normalized so its first
/// nonzero coefficient is positive; the lexicographically smallest wins.
RingElement canonical_choice(const std::vector<RingElement>& candidates);

/// Exact shortest vector by Fincke-Pohst on the LLL-reduced basis. Throws
/// RadiusExhausted when lambda_1^2 > radius_sq and DomainError when the rank
/// exceeds max_enumeration_rank().
SvpCertificate svp_enumerate(const IntegerLattice& lattice, const Integer& radius_sq);

/// svp_enumerate with a default radius (the first LLL vector, which always
/// suffices) and radius doubling on exhaustion, at most four retries.
SvpCertificate svp_shortest(const IntegerLattice& lattice, std::optional<Integer> radius_sq = std::nullopt);

}  // namespace cyclosvp

#endif  // CYCLOSVP_LATTICE_HPP
