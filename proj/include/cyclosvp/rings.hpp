#ifndef CYCLOSVP_RINGS_HPP
#define CYCLOSVP_RINGS_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cyclosvp/integer.hpp"

namespace cyclosvp {

enum class RingKind { Cyclotomic, QuadSqrt2, QuarticTheta };

/// One of the supported rings of integers.
///
///  - Cyclotomic(k): Z[zeta], zeta a primitive 2^(k+1)-th root of unity,
///    basis {1, zeta, ..., zeta^(2^k - 1)}, zeta^(2^k) = -1. Level 1 is
///    Z[i] ("GaussianInt"), level 2 is Z[zeta_8] ("CycloEighth").
///  - QuadSqrt2: Z[sqrt2], basis {1, sqrt2}.
///  - QuarticTheta: Z[theta], theta = zeta16 + zeta16^7, basis
///    {1, theta, theta^2, theta^3}, theta^4 = -4 theta^2 - 2.
class RingTag {
 public:
  static RingTag cyclotomic(int level);
  static RingTag gaussian() { return cyclotomic(1); }
  static RingTag cyclo_eighth() { return cyclotomic(2); }
  static RingTag quad_sqrt2() { return RingTag(RingKind::QuadSqrt2, 0); }
  static RingTag quartic_theta() { return RingTag(RingKind::QuarticTheta, 0); }

  /// Accepts GaussianInt, QuadSqrt2, CycloEighth, QuarticTheta and
  /// CycloPow2(k); aliases resolve to one canonical tag.
  static RingTag parse(std::string_view name);

  RingKind kind() const { return kind_; }
  int level() const { return level_; }
  bool is_cyclotomic() const { return kind_ == RingKind::Cyclotomic; }
  int degree() const;
  std::string name() const;

  /// Monic defining polynomial of the power-basis generator, low degree first.
  std::vector<Integer> defining_polynomial() const;

  bool operator==(const RingTag&) const = default;

 private:
  RingTag(RingKind kind, int level) : kind_(kind), level_(level) {}
  RingKind kind_;
  int level_;
};

/// Exact element of a supported ring: integer coefficients in the ring's
/// power basis. Values are immutable once built.
class RingElement {
 public:
  RingElement(RingTag ring, IntVector coeffs);

  static RingElement zero(RingTag ring);
  static RingElement one(RingTag ring);
  static RingElement constant(RingTag ring, const Integer& c);
  /// The power-basis generator (i, sqrt2, zeta or theta).
  static RingElement generator(RingTag ring);
  static RingElement from_coeffs(RingTag ring, std::initializer_list<long long> coeffs);

  const RingTag& ring() const { return ring_; }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& operator[](int i) const { return coeffs_(i); }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const Integer& c, const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);

 private:
  RingTag ring_;
  IntVector coeffs_;
};

/// Exact product reduced by the defining relation. Ring mismatch throws
/// DomainError.
RingElement mul(const RingElement& x, const RingElement& y);
RingElement power(const RingElement& x, unsigned e);

/// sigma_i: zeta -> zeta^i for cyclotomic rings, via Z[zeta_8] for QuadSqrt2
/// and via Z[zeta_16] for QuarticTheta. i must be odd.
RingElement apply_automorphism(const RingElement& x, long long i);

/// Complex conjugation (sigma_{-1}).
RingElement conjugate(const RingElement& x);

/// Odd indices i giving each automorphism of the ring exactly once.
std::vector<long long> automorphism_indices(const RingTag& ring);

/// Row j holds the coefficients of x * basis_j.
IntMatrix multiplication_matrix(const RingElement& x);
Integer trace(const RingElement& x);
/// Product of all embeddings, computed as det of the multiplication matrix.
Integer field_norm(const RingElement& x);

/// Gram matrix of the power basis under <x, y> = Tr(x * conj(y)), i.e. the
/// canonical-embedding inner product. Cyclotomic levels use 2^k * I.
const IntMatrix& canonical_form(const RingTag& ring);
/// Same matrix built from traces of products, for any ring.
IntMatrix canonical_form_from_traces(const RingTag& ring);

Integer canonical_inner(const RingElement& x, const RingElement& y);
/// ||Sigma(x)||^2 as an exact integer.
Integer canonical_sq_length(const RingElement& x);

/// True when the fixed tower homomorphism from -> to exists.
bool embeds(const RingTag& from, const RingTag& to);
/// Image of the generator of `from` inside `to`.
RingElement generator_image(const RingTag& from, const RingTag& to);
RingElement lift_element(const RingElement& x, const RingTag& target);

/// Order of the torsion generator: 2^(k+1) for Cyclotomic(k), 2 otherwise.
long long torsion_order(const RingTag& ring);
RingElement torsion_generator(const RingTag& ring);
/// epsilon = 1 + sqrt2; DomainError in Z[i].
RingElement fundamental_unit(const RingTag& ring);
RingElement fundamental_unit_inverse(const RingTag& ring);
/// torsion^torsion_k * epsilon^eps_n.
RingElement unit(const RingTag& ring, long long torsion_k, long long eps_n);

std::string to_string(const RingElement& x);

}  // namespace cyclosvp

#endif  // CYCLOSVP_RINGS_HPP
