#include "cyclosvp/lattice.hpp"

#include <cstdlib>
#include <string>

#include "cyclosvp/error.hpp"
#include "cyclosvp/linalg.hpp"
#include "cyclosvp/ntheory.hpp"

namespace cyclosvp {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

IntVector sign_normalized(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return v(i) < 0 ? IntVector(-v) : v;
  }
  return v;
}

IntegerLattice transformed(const IntegerLattice& lattice, const IntMatrix& u) {
  IntegerLattice out = lattice;
  out.basis = u * lattice.basis;
  out.gram = u * lattice.gram * u.transpose();
  out.transform = u * lattice.transform;
  return out;
}

}  // namespace

RingElement IntegerLattice::element(int i) const { return RingElement(ring, basis.row(i).transpose()); }

RingElement IntegerLattice::combination(const IntVector& coords) const {
  return RingElement(ring, (coords.transpose() * basis).transpose());
}

IntMatrix gram_matrix(const RingTag& ring, const IntMatrix& basis) {
  if (ring.is_cyclotomic()) return Integer(ring.degree()) * (basis * basis.transpose());
  return basis * canonical_form(ring) * basis.transpose();
}

IntegerLattice make_lattice(const RingTag& ring, const IntMatrix& basis, std::optional<TwoElementIdeal> ideal) {
  if (basis.cols() != ring.degree()) {
    throw DomainError("bad_basis", "basis width must equal the ring degree");
  }
  IntegerLattice out{ring, basis, gram_matrix(ring, basis), IntMatrix::Identity(basis.rows(), basis.rows()),
                     std::move(ideal)};
  return out;
}

IntegerLattice ideal_lattice(const RingTag& ring, const std::vector<RingElement>& generators) {
  const int d = ring.degree();
  IntMatrix gens(static_cast<Eigen::Index>(generators.size()) * d, d);
  Eigen::Index row = 0;
  for (const RingElement& g : generators) {
    if (!(g.ring() == ring)) throw DomainError("ring_mismatch", "generator outside " + ring.name());
    const IntMatrix m = multiplication_matrix(g);
    gens.middleRows(row, d) = m;
    row += d;
  }
  return make_lattice(ring, hermite_normal_form(gens));
}

IntegerLattice ideal_lattice(const TwoElementIdeal& ideal) {
  const RingTag ring = ideal.pi.ring();
  IntegerLattice out = ideal_lattice(ring, {RingElement::constant(ring, ideal.p), ideal.pi});
  out.ideal = ideal;
  return out;
}

IntegerLattice prime_ideal_lattice(const RingTag& ring, const Integer& p, const Integer& r) {
  if (p < 2 || !is_prime(p)) throw DomainError("not_prime", "p must be prime");
  const Integer residue = poly_eval(ring.defining_polynomial(), r, p);
  if (residue != 0) {
    throw DomainError("not_an_ideal", "r is not a root of the defining polynomial mod p",
                      {{"residue", static_cast<std::int64_t>(residue > INT64_MAX ? -1 : residue)}});
  }
  const RingElement pi = RingElement::generator(ring) - RingElement::constant(ring, r);
  return ideal_lattice(TwoElementIdeal{p, pi, r});
}

bool contains(const IntegerLattice& lattice, const RingElement& x) {
  if (!(x.ring() == lattice.ring)) return false;
  const IntMatrix hnf = hermite_normal_form(lattice.basis);
  return solve_lower_triangular<Integer>(hnf, x.coeffs().transpose(), nullptr);
}

Integer gram_determinant(const IntegerLattice& lattice) { return bareiss_determinant(lattice.gram); }

IntegerLattice gauss_reduce(const IntegerLattice& lattice) {
  if (lattice.rank() != 2) {
    throw DomainError("rank_mismatch", "Gauss reduction needs a rank-2 lattice", {{"rank", lattice.rank()}});
  }
  return transformed(lattice, gauss_reduce_gram(lattice.gram));
}

IntegerLattice lll_reduce(const IntegerLattice& lattice, long delta_num, long delta_den) {
  if (4 * delta_num <= delta_den || delta_num > delta_den) {
    throw DomainError("invalid_delta", "LLL needs 1/4 < delta <= 1");
  }
  return transformed(lattice, lll_reduce_gram(lattice.gram, delta_num, delta_den));
}

std::string to_string(SvpMethod method) {
  switch (method) {
    case SvpMethod::AnalyticFormula:
      return "analytic-formula";
    case SvpMethod::Enumeration:
      return "enumeration";
    case SvpMethod::GeneratorSearch:
      return "generator-search";
  }
  return {};
}

int max_enumeration_rank() {
  if (const char* env = std::getenv("CYCLOSVP_MAX_RANK")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
  }
  return 16;
}

RingElement canonical_choice(const std::vector<RingElement>& candidates) {
  if (candidates.empty()) throw DomainError("empty_candidates", "no candidate vectors");
  IntVector best = sign_normalized(candidates.front().coeffs());
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    IntVector c = sign_normalized(candidates[i].coeffs());
    if (lex_less(c, best)) best = std::move(c);
  }
  return RingElement(candidates.front().ring(), std::move(best));
}

SvpCertificate svp_enumerate(const IntegerLattice& lattice, const Integer& radius_sq) {
  const int cap = max_enumeration_rank();
  if (lattice.rank() > cap) {
    throw DomainError("rank_exceeds_cap", "lattice rank exceeds the enumeration cap",
                      {{"rank", lattice.rank()}, {"max_rank", cap}});
  }
  const IntegerLattice reduced = lattice.rank() >= 2 ? lll_reduce(lattice) : lattice;
  const ShortVectors<Integer> sv = fincke_pohst(reduced.gram, radius_sq);
  std::vector<RingElement> found;
  found.reserve(sv.coords.size());
  for (const IntVector& x : sv.coords) found.push_back(reduced.combination(x));
  SvpCertificate cert{canonical_choice(found), sv.sq_length, SvpMethod::Enumeration, false, lattice.ideal, sv.nodes};
  if (canonical_sq_length(cert.vector) != cert.sq_length) {
    throw ConsistencyError("enumerated vector length disagrees with the Gram form");
  }
  return cert;
}

SvpCertificate svp_shortest(const IntegerLattice& lattice, std::optional<Integer> radius_sq) {
  Integer radius;
  if (radius_sq) {
    radius = *radius_sq;
  } else {
    const IntegerLattice reduced = lattice.rank() >= 2 ? lll_reduce(lattice) : lattice;
    radius = reduced.gram(0, 0);
  }
  for (int attempt = 0;; ++attempt) {
    try {
      return svp_enumerate(lattice, radius);
    } catch (const RadiusExhausted&) {
      if (attempt == 4) throw;
      radius *= 2;
    }
  }
}

}  // namespace cyclosvp
