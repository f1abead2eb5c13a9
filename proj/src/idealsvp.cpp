#include "cyclosvp/idealsvp.hpp"

#include <algorithm>
#include <cmath>

#include "cyclosvp/decimal.hpp"
#include "cyclosvp/error.hpp"
#include "cyclosvp/linalg.hpp"

namespace cyclosvp {

namespace {

std::int64_t small(const Integer& x) {
  if (x > INT64_MAX || x < INT64_MIN) return -1;
  return static_cast<std::int64_t>(x);
}

Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void check_level(int n) {
  if (n < 1 || n > 20) throw DomainError("invalid_level", "tower level n must be in [1, 20]", {{"n", n}});
}

// Multiplicative order of p modulo 2^(n+1): the residue degree of p in
// Q(zeta_{2^(n+1)}).
int residue_degree_cyclotomic(const Integer& p, int n) {
  const Integer m = pow2(static_cast<unsigned>(n + 1));
  const Integer base = mod(p, m);
  Integer x = base;
  int order = 1;
  while (x != 1) {
    x = x * base % m;
    ++order;
  }
  return order;
}

PolyModP poly_from(std::initializer_list<long long> c, const Integer& p) {
  PolyModP f;
  for (long long v : c) f.emplace_back(v);
  return poly_reduce(f, p);
}

Integer smallest_root(const PolyModP& f, const Integer& p, const std::optional<Integer>& hint) {
  if (hint) {
    const Integer residue = poly_eval(f, *hint, p);
    if (residue != 0) {
      throw DomainError("not_an_ideal", "root hint is not a root of the defining polynomial mod p",
                        {{"residue", small(residue)}});
    }
    return mod(*hint, p);
  }
  const std::vector<Integer> roots = roots_mod(f, p);
  if (roots.empty()) throw ConsistencyError("expected a root mod p for this residue class", {{"p", small(p)}});
  return roots.front();
}

// Throws for unsupported classes and levels below the class minimum.
void check_covered(const ResidueClass& rc, int n) {
  check_level(n);
  if (!rc.supported) {
    throw DomainError("class_not_covered", "no lambda_1 formula for this residue class",
                      {{"class_mod16", rc.class_mod16}});
  }
  if (rc.class_mod16 == 7 && n < 3) {
    throw DomainError("level_below_class_minimum", "p = 7 mod 16 needs n >= 3 (zeta16 must embed)",
                      {{"n", n}, {"min_level", 3}});
  }
}

RingElement first_contained_image(const PrimeIdeal& ideal, const RingElement& w) {
  for (long long i : automorphism_indices(w.ring())) {
    RingElement image = apply_automorphism(w, i);
    if (ideal.contains(image)) return image;
  }
  throw ConsistencyError("no conjugate of the constructed witness lies in the ideal", {{"p", small(ideal.p)}});
}

bool is_svsg_ring(const RingTag& ring) {
  return (ring.is_cyclotomic() && ring.level() <= 2) || ring.kind() == RingKind::QuadSqrt2 ||
         ring.kind() == RingKind::QuarticTheta;
}

// Real u, v with g * conj(g) (or g^2 in Z[sqrt2]) = u + v sqrt2.
std::pair<Integer, Integer> real_part_coordinates(const RingElement& g) {
  switch (g.ring().kind()) {
    case RingKind::QuadSqrt2: {
      const RingElement s = mul(g, g);
      return {s[0], s[1]};
    }
    case RingKind::Cyclotomic: {
      const RingElement h = mul(g, conjugate(g));
      return {h[0], h[1]};
    }
    case RingKind::QuarticTheta: {
      const RingElement h = mul(g, conjugate(g));
      return {h[0] - 2 * h[2], h[2]};
    }
  }
  return {};
}

RingElement times_unit_power(const RingElement& g, long long m) {
  return mul(g, unit(g.ring(), 0, m));
}

// Enumerates the certificate's ideal up to its length; a shorter vector or a
// witness outside the ideal throws ConsistencyError.
void confirm_by_enumeration(SvpCertificate& cert) {
  const IntegerLattice lattice = ideal_lattice(*cert.ideal);
  if (!contains(lattice, cert.vector)) throw ConsistencyError("witness is outside its ideal");
  SvpCertificate check;
  try {
    check = svp_enumerate(lattice, cert.sq_length);
  } catch (const RadiusExhausted&) {
    throw ConsistencyError("enumeration missed a lattice vector of known length");
  }
  if (check.sq_length != cert.sq_length) {
    throw ConsistencyError("ideal has a vector shorter than the witness",
                           {{"witness", small(cert.sq_length)}, {"enumerated", small(check.sq_length)}});
  }
  cert.cross_checked = true;
  cert.nodes = check.nodes;
}

}  // namespace

// ---------------------------------------------------------------------------
// Prime ideals

Integer PrimeIdeal::norm() const { return ipow(p, static_cast<unsigned>(residue_degree())); }

bool PrimeIdeal::contains(const RingElement& x) const {
  if (!(x.ring() == ring)) return false;
  PolyModP f(x.coeffs().begin(), x.coeffs().end());
  return poly_degree(poly_rem(poly_reduce(f, p), factor, p)) < 0;
}

PrimeIdeal prime_ideal_from_factor(const RingTag& ring, const Integer& p, const PolyModP& factor) {
  const PolyModP g = poly_reduce(factor, p);
  const PolyModP f = poly_reduce(ring.defining_polynomial(), p);
  if (poly_degree(g) < 1 || g.back() != 1 || poly_degree(poly_rem(f, g, p)) >= 0) {
    throw DomainError("not_an_ideal", "factor must be a monic divisor of the defining polynomial mod p");
  }
  const int d = ring.degree();
  if (poly_degree(g) == 1) return prime_ideal_from_root(ring, p, mod(-g[0], p));
  IntVector c = IntVector::Zero(d);
  const std::vector<Integer> full = ring.defining_polynomial();
  for (int j = 0; j < d; ++j) {
    const Integer gj = j < static_cast<int>(g.size()) ? g[j] : Integer(0);
    // g(theta) with deg g = d equals (g - f)(theta).
    c(j) = poly_degree(g) == d ? Integer(gj - full[j]) : gj;
  }
  return PrimeIdeal{ring, p, g, RingElement(ring, std::move(c)), std::nullopt};
}

PrimeIdeal prime_ideal_from_root(const RingTag& ring, const Integer& p, const Integer& r) {
  const Integer residue = poly_eval(ring.defining_polynomial(), r, p);
  if (residue != 0) {
    throw DomainError("not_an_ideal", "r is not a root of the defining polynomial mod p",
                      {{"residue", small(residue)}});
  }
  const Integer root = mod(r, p);
  const RingElement pi = RingElement::generator(ring) - RingElement::constant(ring, root);
  return PrimeIdeal{ring, p, PolyModP{mod(-root, p), Integer(1)}, pi, root};
}

std::vector<PrimeIdeal> prime_ideals_up_to(const RingTag& ring, const Integer& bound) {
  std::vector<PrimeIdeal> out;
  for (Integer p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const PolyModP& g : irreducible_factors(ring.defining_polynomial(), p)) {
      if (ipow(p, static_cast<unsigned>(poly_degree(g))) <= bound) out.push_back(prime_ideal_from_factor(ring, p, g));
    }
  }
  return out;
}

TwoElementIdeal extend(const PrimeIdeal& ideal, int n) {
  const RingTag target = RingTag::cyclotomic(n);
  return TwoElementIdeal{ideal.p, lift_element(ideal.pi, target), std::nullopt};
}

// ---------------------------------------------------------------------------
// Cornacchia

std::pair<Integer, Integer> cornacchia(const Integer& p, int d) {
  if (d != 1 && d != 2) throw DomainError("invalid_d", "cornacchia supports d = 1 and d = 2", {{"d", d}});
  if (p < 3 || !is_prime(p)) throw DomainError("not_prime", "p must be an odd prime");
  const int c8 = static_cast<int>(p % 8);
  const bool representable = d == 1 ? (c8 == 1 || c8 == 5) : (c8 == 1 || c8 == 3);
  if (!representable) {
    throw DomainError("no_representation", "p is not of the form a^2 + d b^2", {{"d", d}, {"class_mod8", c8}});
  }
  const auto root = sqrt_mod(mod(Integer(-d), p), p);
  if (!root) throw ConsistencyError("-d should be a residue mod p", {{"p", small(p)}});
  Integer a = p;
  Integer b = p - *root;
  while (b * b >= p) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  const Integer rest = p - b * b;
  Integer y;
  if (rest % d != 0 || !is_square(rest / d, &y) || y == 0) {
    throw ConsistencyError("Cornacchia descent failed", {{"p", small(p)}, {"d", d}});
  }
  if (d == 1 && b < y) return {y, b};
  return {b, y};
}

// ---------------------------------------------------------------------------
// Lambda_1

int class_minimum_level(const ResidueClass& rc) {
  if (rc.class_mod8 == 5) return 1;
  if (rc.class_mod8 == 3 || rc.class_mod16 == 9) return 2;
  if (rc.class_mod16 == 7) return 3;
  throw DomainError("class_not_covered", "no lambda_1 formula for this residue class",
                    {{"class_mod16", rc.class_mod16}});
}

PrimeIdeal base_prime_ideal(const ResidueClass& rc, int n, std::optional<Integer> root_hint) {
  check_covered(rc, n);
  const Integer& p = rc.p;
  if (rc.class_mod8 == 5 || (rc.class_mod16 == 9 && n == 1)) {
    const Integer r = smallest_root(poly_from({1, 0, 1}, p), p, root_hint);
    return prime_ideal_from_root(RingTag::gaussian(), p, r);
  }
  if (rc.class_mod8 == 3) {
    if (n == 1) {
      // (p) stays prime in Z[i].
      const RingTag ring = RingTag::gaussian();
      return PrimeIdeal{ring, p, poly_from({1, 0, 1}, p), RingElement::zero(ring), std::nullopt};
    }
    const Integer r = smallest_root(poly_from({2, 0, 1}, p), p, root_hint);
    const RingTag ring = RingTag::cyclo_eighth();
    // zeta * (zeta + zeta^3 - r) = zeta^2 - r zeta - 1.
    const RingElement pi = RingElement::from_coeffs(ring, {0, 1, 0, 1}) - RingElement::constant(ring, r);
    return PrimeIdeal{ring, p, poly_reduce({Integer(-1), Integer(-r), Integer(1)}, p), pi, r};
  }
  if (rc.class_mod16 == 9) {
    const Integer r = smallest_root(poly_from({1, 0, 0, 0, 1}, p), p, root_hint);
    return prime_ideal_from_root(RingTag::cyclo_eighth(), p, r);
  }
  const Integer r = smallest_root(poly_from({2, 0, 4, 0, 1}, p), p, root_hint);
  return prime_ideal_from_root(RingTag::quartic_theta(), p, r);
}

SvpCertificate lift_shortest(const SvpCertificate& cert, int n) {
  check_level(n);
  const RingTag target = RingTag::cyclotomic(n);
  const RingTag& source = cert.vector.ring();
  if (!embeds(source, target)) {
    throw DomainError("no_embedding", "no tower homomorphism from " + source.name() + " to " + target.name());
  }
  if (source == target) return cert;
  SvpCertificate out = cert;
  out.vector = lift_element(cert.vector, target);
  out.sq_length = cert.sq_length * (target.degree() / source.degree());
  out.cross_checked = false;
  out.nodes = 0;
  if (canonical_sq_length(out.vector) != out.sq_length) {
    throw ConsistencyError("lifted length does not scale by the degree ratio");
  }
  if (!cert.ideal) {
    out.ideal.reset();
    return out;
  }
  out.ideal = TwoElementIdeal{cert.ideal->p, lift_element(cert.ideal->pi, target), std::nullopt};
  if (target.degree() <= max_enumeration_rank()) confirm_by_enumeration(out);
  return out;
}

SvpCertificate shortest_vector(const Integer& p, int n, std::optional<Integer> root_hint) {
  const ResidueClass rc = classify_prime(p);
  const PrimeIdeal base = base_prime_ideal(rc, n, root_hint);
  SvpCertificate cert;
  if (rc.class_mod8 == 5 || (rc.class_mod16 == 9 && n == 1)) {
    const auto [a, b] = cornacchia(p, 1);
    const RingElement w = RingElement(base.ring, (IntVector(2) << a, b).finished());
    cert.vector = first_contained_image(base, w);
    cert.sq_length = 2 * p;
    cert.method = SvpMethod::AnalyticFormula;
  } else if (rc.class_mod8 == 3 && n == 1) {
    cert.vector = RingElement::constant(base.ring, p);
    cert.sq_length = 2 * p * p;
    cert.method = SvpMethod::AnalyticFormula;
  } else if (rc.class_mod8 == 3) {
    const auto [a, b] = cornacchia(p, 2);
    const RingElement w = RingElement(base.ring, (IntVector(4) << a, b, 0, b).finished());
    cert.vector = first_contained_image(base, w);
    cert.sq_length = 4 * p;
    cert.method = SvpMethod::AnalyticFormula;
  } else {
    const Integer expected = 4 * solve_pell(p, 1).a;
    try {
      cert = svp_enumerate(base.lattice(), expected);
    } catch (const RadiusExhausted&) {
      throw ConsistencyError("rank-4 ideal has no vector of length 4 a_p", {{"p", small(p)}});
    }
    if (cert.sq_length != expected) {
      throw ConsistencyError("rank-4 enumeration disagrees with 4 a_p",
                             {{"p", small(p)}, {"enumerated", small(cert.sq_length)}, {"formula", small(expected)}});
    }
    cert.cross_checked = true;
  }
  cert.ideal = base.two_element();
  if (canonical_sq_length(cert.vector) != cert.sq_length || !base.contains(cert.vector)) {
    throw ConsistencyError("constructed witness fails length or membership", {{"p", small(p)}});
  }
  SvpCertificate lifted = lift_shortest(cert, n);
  if (!lifted.cross_checked && lifted.ideal && lifted.vector.degree() <= max_enumeration_rank()) {
    confirm_by_enumeration(lifted);
  }
  return lifted;
}

Lambda1Result lambda1_squared(const Integer& p, int n, std::optional<Integer> root_hint, bool enumerate_fallback) {
  check_level(n);
  Lambda1Result res;
  res.p = p;
  res.n = n;
  res.residue_class = classify_prime(p);
  const ResidueClass& rc = res.residue_class;
  const Integer two_n = pow2(static_cast<unsigned>(n));
  res.bound_new_4th = pow2(static_cast<unsigned>(2 * n + 1)) * p;
  const int f = residue_degree_cyclotomic(p, n);
  if ((4 * f) % (1 << n) == 0) {
    res.bound_minkowski_4th = pow2(static_cast<unsigned>(4 * n)) * ipow(p, static_cast<unsigned>(4 * f / (1 << n)));
  }

  if (!rc.supported) {
    if (!enumerate_fallback) check_covered(rc, n);
    const RingTag ring = RingTag::cyclotomic(n);
    if (ring.degree() > max_enumeration_rank()) {
      throw DomainError("rank_exceeds_cap", "enumeration fallback needs 2^n <= max rank",
                        {{"rank", ring.degree()}, {"max_rank", max_enumeration_rank()}});
    }
    const PolyModP g = irreducible_factors(ring.defining_polynomial(), p).front();
    const PrimeIdeal ideal = prime_ideal_from_factor(ring, p, g);
    res.witness = svp_shortest(ideal.lattice());
    res.witness.ideal = ideal.two_element();
    res.lambda1_sq = res.witness.sq_length;
    res.outside_formula = true;
    res.certified = false;
    return res;
  }

  check_covered(rc, n);
  if (rc.class_mod8 == 5) {
    res.lambda1_sq = two_n * p;
  } else if (rc.class_mod8 == 3) {
    res.inert = n == 1;
    res.lambda1_sq = n == 1 ? Integer(2 * p * p) : Integer(two_n * p);
  } else {
    res.pell = solve_pell(p, 1);
    if (n == 1) {
      res.outside_formula = true;
      res.lambda1_sq = 2 * p;
    } else {
      res.lambda1_sq = two_n * res.pell->a;
    }
  }

  res.witness = shortest_vector(p, n, root_hint);
  if (res.witness.sq_length != res.lambda1_sq) {
    throw ConsistencyError("witness length disagrees with the class formula",
                           {{"p", small(p)}, {"n", n}, {"witness", small(res.witness.sq_length)}});
  }
  res.certified = res.witness.cross_checked;
  return res;
}

// ---------------------------------------------------------------------------
// Z[sqrt2]

Integer lambda1_sq_zsqrt2(const Integer& p) {
  if (p < 3 || !is_prime(p)) throw DomainError("not_prime", "p must be an odd prime");
  const int c8 = static_cast<int>(p % 8);
  if (c8 != 1 && c8 != 7) {
    throw DomainError("class_not_covered", "Z[sqrt2] formula needs p = 1, 7 mod 8", {{"class_mod8", c8}});
  }
  const PellSolution plus = solve_pell(p, 1);
  const PellSolution minus = solve_pell(p, -1);
  const Integer first = 2 * plus.a * plus.a - p;
  const Integer second = 2 * minus.a * minus.a + p;
  const Integer sq = 2 * std::min(first, second);
  if (sq * sq > 8 * p * p) {
    throw ConsistencyError("lambda_1 exceeds sqrt(2 sqrt2 p) in Z[sqrt2]", {{"p", small(p)}});
  }
  return sq;
}

bool zsqrt2_first_branch(const Integer& p) {
  const PellSolution plus = solve_pell(p, 1);
  const PellSolution minus = solve_pell(p, -1);
  return 2 * plus.a * plus.a - p < 2 * minus.a * minus.a + p;
}

bool zsqrt2_threshold_branch(const Integer& p) {
  const Integer a = solve_pell(p, 1).a;
  const Integer t = 2 * a * a - p;
  return t * t < 2 * p * p;
}

// ---------------------------------------------------------------------------
// Shortest generators

RingElement find_generator(const PrimeIdeal& ideal) {
  const Integer target = ideal.norm();
  const IntegerLattice reduced = lll_reduce(ideal.lattice());
  const int d = reduced.rank();
  if (d <= 8) {
    IntVector x = IntVector::Constant(d, Integer(-1));
    for (;;) {
      if (!x.isZero()) {
        const RingElement v = reduced.combination(x);
        if (abs(field_norm(v)) == target) return v;
      }
      int i = 0;
      while (i < d && x(i) == 1) x(i++) = -1;
      if (i == d) break;
      ++x(i);
    }
  }
  Integer radius = reduced.gram(0, 0);
  for (int attempt = 0; attempt < 6; ++attempt, radius *= 2) {
    ShortVectors<Integer> sv;
    try {
      sv = fincke_pohst(reduced.gram, radius);
    } catch (const RadiusExhausted&) {
      continue;
    }
    for (const IntVector& c : sv.coords) {
      const RingElement v = reduced.combination(c);
      if (abs(field_norm(v)) == target) return v;
    }
  }
  throw ConsistencyError("no generator found for a prime ideal assumed principal", {{"p", small(ideal.p)}});
}

SvpCertificate shortest_generator(const PrimeIdeal& ideal) {
  const RingTag& ring = ideal.ring;
  if (!is_svsg_ring(ring)) {
    throw DomainError("ring_not_supported", "shortest generators are searched in Z[i], Z[sqrt2], Z[zeta8], QuarticTheta");
  }
  const RingElement g = find_generator(ideal);
  std::vector<RingElement> best;
  Integer best_len;
  if (ring.is_cyclotomic() && ring.level() == 1) {
    best.push_back(g);
    best_len = canonical_sq_length(g);
  } else {
    const auto [u, v] = real_part_coordinates(g);
    const long double root2 = std::sqrt(2.0L);
    const long double norm = (u * u - 2 * v * v).convert_to<long double>();
    const long double ud = u.convert_to<long double>();
    const long double vd = v.convert_to<long double>();
    long double a;
    long double b;
    if ((u >= 0) == (v >= 0)) {
      a = ud + vd * root2;
      b = norm / a;
    } else {
      b = ud - vd * root2;
      a = norm / b;
    }
    const long double eps = 1.0L + root2;
    const long double x0 = std::log(b / a) / (4.0L * std::log(eps));
    const long long lo = static_cast<long long>(std::floor(x0)) - 1;
    const long long hi = static_cast<long long>(std::ceil(x0)) + 1;
    auto length = [&](long long m) { return canonical_sq_length(times_unit_power(g, m)); };
    long long m_best = lo;
    best_len = length(lo);
    for (long long m = lo + 1; m <= hi; ++m) {
      const Integer len = length(m);
      if (len < best_len) {
        best_len = len;
        m_best = m;
      }
    }
    // f is convex in m, so a local minimum is global.
    while (length(m_best - 1) < best_len) best_len = length(--m_best);
    while (length(m_best + 1) < best_len) best_len = length(++m_best);
    best.push_back(times_unit_power(g, m_best));
    for (long long m : {m_best - 1, m_best + 1}) {
      if (length(m) == best_len) best.push_back(times_unit_power(g, m));
    }
  }
  std::vector<RingElement> orbit;
  const RingElement zeta = torsion_generator(ring);
  for (const RingElement& w : best) {
    RingElement t = w;
    for (long long k = 0; k < torsion_order(ring); ++k) {
      orbit.push_back(t);
      t = mul(t, zeta);
    }
  }
  SvpCertificate cert{canonical_choice(orbit), best_len, SvpMethod::GeneratorSearch, false, ideal.two_element(), 0};
  if (abs(field_norm(cert.vector)) != ideal.norm() || !ideal.contains(cert.vector)) {
    throw ConsistencyError("shortest generator does not generate the ideal", {{"p", small(ideal.p)}});
  }
  return cert;
}

SvpCertificate shortest_generator(const Integer& p, const RingTag& ring, const Integer& r) {
  if (p < 2 || !is_prime(p)) throw DomainError("not_prime", "p must be prime");
  return shortest_generator(prime_ideal_from_root(ring, p, r));
}

// ---------------------------------------------------------------------------
// Bounds and verification

Bounds bounds(const Integer& p, int n) {
  const Lambda1Result res = lambda1_squared(p, n);
  Bounds b;
  b.p = p;
  b.n = n;
  b.lambda1_sq = res.lambda1_sq;
  b.new_bound_4th = res.bound_new_4th;
  b.minkowski_4th = *res.bound_minkowski_4th;
  b.lambda1_decimal = decimal_root(b.lambda1_sq, 2);
  b.new_bound_decimal = decimal_root(b.new_bound_4th, 4);
  b.minkowski_decimal = decimal_root(b.minkowski_4th, 4);
  b.chain_holds = b.lambda1_sq * b.lambda1_sq < b.new_bound_4th && b.new_bound_4th < b.minkowski_4th;
  return b;
}

SvsgReport svsg_verify(const RingTag& ring, const Integer& norm_bound) {
  if (!is_svsg_ring(ring)) {
    throw DomainError("ring_not_supported", "SVSG verification covers Z[i], Z[sqrt2], Z[zeta8], QuarticTheta");
  }
  SvsgReport report{ring, norm_bound, {}, 0};
  for (const PrimeIdeal& ideal : prime_ideals_up_to(ring, norm_bound)) {
    SvsgEntry e;
    e.p = ideal.p;
    e.factor = ideal.factor;
    e.norm = ideal.norm();
    e.enumeration_sq = svp_shortest(ideal.lattice()).sq_length;
    const SvpCertificate gen = shortest_generator(ideal);
    e.generator_sq = gen.sq_length;
    e.generator = gen.vector;
    e.pass = e.enumeration_sq == e.generator_sq;
    const int c8 = static_cast<int>(ideal.p % 8);
    if (ring.kind() == RingKind::QuadSqrt2 && ideal.residue_degree() == 1 && (c8 == 1 || c8 == 7)) {
      e.formula_sq = lambda1_sq_zsqrt2(ideal.p);
      e.pass = e.pass && *e.formula_sq == e.enumeration_sq;
    }
    if (!e.pass) ++report.mismatches;
    report.entries.push_back(std::move(e));
  }
  return report;
}

Zeta16LiftReport zeta16_lift_check(const Integer& p) {
  const ResidueClass rc = classify_prime(p);
  if (rc.class_mod16 != 7) {
    throw DomainError("class_not_covered", "the zeta16 lift check needs p = 7 mod 16",
                      {{"class_mod16", rc.class_mod16}});
  }
  const PrimeIdeal base = base_prime_ideal(rc, 3);
  const TwoElementIdeal ext = extend(base, 3);
  Zeta16LiftReport rep;
  rep.p = p;
  rep.r = *base.r;
  rep.a_p = solve_pell(p, 1).a;
  const SvpCertificate sub = svp_shortest(base.lattice());
  const IntegerLattice ext_lattice = ideal_lattice(ext);
  const SvpCertificate big = svp_shortest(ext_lattice);
  rep.subfield_sq = sub.sq_length;
  rep.extension_sq = big.sq_length;
  rep.subfield_witness = sub.vector;
  rep.lifted_witness = lift_element(sub.vector, RingTag::cyclotomic(3));
  rep.ratio_ok = rep.extension_sq == 2 * rep.subfield_sq;
  rep.witness_ok = contains(ext_lattice, rep.lifted_witness) &&
                   canonical_sq_length(rep.lifted_witness) == rep.extension_sq;
  rep.formula_ok = rep.subfield_sq == 4 * rep.a_p;
  rep.pass = rep.ratio_ok && rep.witness_ok && rep.formula_ok;
  return rep;
}

}  // namespace cyclosvp
