#include "cyclosvp/pell.hpp"

#include <optional>

#include "cyclosvp/error.hpp"
#include "cyclosvp/linalg.hpp"
#include "cyclosvp/ntheory.hpp"

namespace cyclosvp {

namespace {

std::int64_t small(const Integer& p) { return p > INT64_MAX ? -1 : static_cast<std::int64_t>(p); }

void check_domain(const Integer& p, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("invalid_sign", "sign must be +1 or -1", {{"sign", sign}});
  if (p == 2) throw DomainError("ramified_unsupported", "p = 2 ramifies in Z[sqrt2]");
  if (p < 2 || !is_prime(p)) throw DomainError("not_prime", "p must be an odd prime");
  const int c = static_cast<int>(p % 8);
  if (c == 3 || c == 5) {
    throw DomainError("equation_unsolvable", "a^2 - 2b^2 = +-p has no solution: 2 is a non-residue mod p",
                      {{"class_mod8", c}});
  }
}

Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

PellLattice pell_lattice(const Integer& p, const Integer& r) {
  PellLattice out;
  out.r = r;
  out.gram.resize(2, 2);
  out.gram << 2 * p * p, 2 * p * r, 2 * p * r, 2 * r * r + 4;
  out.transform = gauss_reduce_gram(out.gram);
  const Integer x = out.transform(0, 0);
  const Integer y = out.transform(0, 1);
  out.u = x * p + y * r;
  out.v = y;
  out.sq_length = 2 * out.u * out.u + 4 * out.v * out.v;
  return out;
}

PellSolution solve_pell(const Integer& p, int sign) {
  check_domain(p, sign);
  const auto r = sqrt_mod(Integer(2), p);
  if (!r) throw ConsistencyError("2 is a residue mod p but no square root was found", {{"p", small(p)}});
  const PellLattice lat = pell_lattice(p, *r);
  const Integer u = abs(lat.u);
  const Integer v = abs(lat.v);
  const Integer norm = u * u - 2 * v * v;
  Integer a;
  if (norm == p) {
    a = u;
  } else if (norm == -p) {
    a = 2 * v - u;
  } else {
    throw ConsistencyError("reduced vector of the Pell lattice does not have norm +-p", {{"p", small(p)}});
  }
  Integer b;
  if (a <= 0 || !is_square((a * a - p) / 2, &b) || a * a - 2 * b * b != p || b <= 0) {
    throw ConsistencyError("lattice route produced no solution of a^2 - 2b^2 = p", {{"p", small(p)}});
  }
  if (sign == 1) return {p, 1, a, b};
  PellSolution neg{p, -1, a - 2 * b, a - b};
  if (neg.a <= 0 || neg.a * neg.a - 2 * neg.b * neg.b != -p) {
    throw ConsistencyError("a_{-p} = a_p - 2b_p, b_{-p} = a_p - b_p failed", {{"p", small(p)}});
  }
  return neg;
}

PellSolution pell_oracle(const Integer& p, int sign) {
  check_domain(p, sign);
  if (sign == 1) {
    Integer a = isqrt(p);
    if (a * a < p) ++a;
    const Integer hi = isqrt(2 * p);
    std::optional<PellSolution> found;
    for (; a <= hi; ++a) {
      const Integer t = a * a - p;
      if (t % 2 != 0) continue;
      Integer b;
      if (t > 0 && is_square(t / 2, &b)) {
        if (found) throw ConsistencyError("two solutions of a^2 - 2b^2 = p below sqrt(2p)", {{"p", small(p)}});
        found = PellSolution{p, 1, a, b};
      }
    }
    if (!found) throw ConsistencyError("no solution of a^2 - 2b^2 = p below sqrt(2p)", {{"p", small(p)}});
    return *found;
  }
  // a^2 = 2b^2 - p with a < sqrt(2p) + 2 sqrt(p) bounds b^2 < (a^2 + p) / 2.
  const Integer a_cap = isqrt(2 * p) + 2 * isqrt(p) + 3;
  const Integer b_cap = isqrt((a_cap * a_cap + p) / 2) + 1;
  Integer b = isqrt(p / 2);
  if (b < 1) b = 1;
  for (; b <= b_cap; ++b) {
    const Integer t = 2 * b * b - p;
    Integer a;
    if (t > 0 && is_square(t, &a)) return {p, -1, a, b};
  }
  throw ConsistencyError("no solution of a^2 - 2b^2 = -p in the search window", {{"p", small(p)}});
}

}  // namespace cyclosvp
