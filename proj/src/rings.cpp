#include "cyclosvp/rings.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "cyclosvp/error.hpp"
#include "cyclosvp/linalg.hpp"

namespace cyclosvp {

namespace {

constexpr int kMaxLevel = 20;

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring())) {
    throw DomainError("ring_mismatch", "operands live in " + x.ring().name() + " and " + y.ring().name());
  }
}

// Elements in Z[zeta_{2^(n+1)}] given as a sparse list of (exponent, coeff);
// exponents are reduced with zeta^(2^n) = -1.
RingElement cyclotomic_monomials(const RingTag& ring, std::initializer_list<std::pair<long long, long long>> terms) {
  const long long d = ring.degree();
  const long long m = 2 * d;
  IntVector c = IntVector::Zero(d);
  for (const auto& [e, coeff] : terms) {
    long long r = ((e % m) + m) % m;
    if (r < d) {
      c(r) += coeff;
    } else {
      c(r - d) -= coeff;
    }
  }
  return RingElement(ring, std::move(c));
}

// Horner evaluation of x's coefficient polynomial at `image`.
RingElement evaluate_at(const RingElement& x, const RingElement& image) {
  RingElement acc = RingElement::zero(image.ring());
  for (int j = x.degree() - 1; j >= 0; --j) {
    acc = mul(acc, image) + RingElement::constant(image.ring(), x[j]);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingTag

RingTag RingTag::cyclotomic(int level) {
  if (level < 1 || level > kMaxLevel) {
    throw DomainError("invalid_ring", "cyclotomic level must be in [1, 20]", {{"level", level}});
  }
  return RingTag(RingKind::Cyclotomic, level);
}

RingTag RingTag::parse(std::string_view name) {
  if (name == "GaussianInt") return gaussian();
  if (name == "CycloEighth") return cyclo_eighth();
  if (name == "QuadSqrt2") return quad_sqrt2();
  if (name == "QuarticTheta") return quartic_theta();
  constexpr std::string_view prefix = "CycloPow2(";
  if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix && name.back() == ')') {
    const std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    if (!digits.empty() && digits.size() <= 3 && digits.find_first_not_of("0123456789") == std::string::npos) {
      return cyclotomic(std::stoi(digits));
    }
  }
  throw DomainError("unknown_ring", "unknown ring '" + std::string(name) + "'");
}

int RingTag::degree() const {
  switch (kind_) {
    case RingKind::Cyclotomic:
      return 1 << level_;
    case RingKind::QuadSqrt2:
      return 2;
    case RingKind::QuarticTheta:
      return 4;
  }
  return 0;
}

std::string RingTag::name() const {
  switch (kind_) {
    case RingKind::Cyclotomic:
      if (level_ == 1) return "GaussianInt";
      if (level_ == 2) return "CycloEighth";
      return "CycloPow2(" + std::to_string(level_) + ")";
    case RingKind::QuadSqrt2:
      return "QuadSqrt2";
    case RingKind::QuarticTheta:
      return "QuarticTheta";
  }
  return {};
}

std::vector<Integer> RingTag::defining_polynomial() const {
  switch (kind_) {
    case RingKind::Cyclotomic: {
      std::vector<Integer> f(static_cast<std::size_t>(degree()) + 1, Integer(0));
      f.front() = 1;
      f.back() = 1;
      return f;
    }
    case RingKind::QuadSqrt2:
      return {Integer(-2), Integer(0), Integer(1)};
    case RingKind::QuarticTheta:
      return {Integer(2), Integer(0), Integer(4), Integer(0), Integer(1)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingTag ring, IntVector coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.degree()) {
    throw DomainError("bad_coefficients", ring_.name() + " needs " + std::to_string(ring_.degree()) + " coefficients",
                      {{"given", static_cast<std::int64_t>(coeffs_.size())}});
  }
}

RingElement RingElement::zero(RingTag ring) { return RingElement(ring, IntVector::Zero(ring.degree())); }

RingElement RingElement::one(RingTag ring) { return constant(ring, Integer(1)); }

RingElement RingElement::constant(RingTag ring, const Integer& c) {
  IntVector v = IntVector::Zero(ring.degree());
  v(0) = c;
  return RingElement(ring, std::move(v));
}

RingElement RingElement::generator(RingTag ring) {
  IntVector v = IntVector::Zero(ring.degree());
  v(1) = 1;
  return RingElement(ring, std::move(v));
}

RingElement RingElement::from_coeffs(RingTag ring, std::initializer_list<long long> coeffs) {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (long long c : coeffs) v(i++) = c;
  return RingElement(ring, std::move(v));
}

bool RingElement::is_zero() const { return coeffs_.isZero(); }

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement(a.ring_, a.coeffs_ + b.coeffs_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement(a.ring_, a.coeffs_ - b.coeffs_);
}

RingElement operator-(const RingElement& a) { return RingElement(a.ring_, -a.coeffs_); }

RingElement operator*(const Integer& c, const RingElement& a) { return RingElement(a.ring_, c * a.coeffs_); }

RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

// ---------------------------------------------------------------------------
// Arithmetic

RingElement mul(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const RingTag& ring = x.ring();
  const int d = ring.degree();
  IntVector out = IntVector::Zero(d);
  if (ring.is_cyclotomic()) {
    for (int i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        const int e = i + j;
        if (e < d) {
          out(e) += x[i] * y[j];
        } else {
          out(e - d) -= x[i] * y[j];
        }
      }
    }
    return RingElement(ring, std::move(out));
  }
  std::vector<Integer> prod(static_cast<std::size_t>(2 * d - 1), Integer(0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) prod[i + j] += x[i] * y[j];
  }
  const std::vector<Integer> f = ring.defining_polynomial();
  for (int t = 2 * d - 2; t >= d; --t) {
    const Integer c = prod[t];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) prod[t - d + j] -= c * f[j];
  }
  for (int i = 0; i < d; ++i) out(i) = prod[i];
  return RingElement(ring, std::move(out));
}

RingElement power(const RingElement& x, unsigned e) {
  RingElement result = RingElement::one(x.ring());
  RingElement base = x;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

RingElement apply_automorphism(const RingElement& x, long long i) {
  const RingTag& ring = x.ring();
  auto invalid = [&] {
    return DomainError("invalid_automorphism", "sigma_i needs i odd", {{"i", static_cast<std::int64_t>(i)}});
  };
  if (i % 2 == 0) throw invalid();
  switch (ring.kind()) {
    case RingKind::Cyclotomic: {
      const long long d = ring.degree();
      const long long m = 2 * d;
      const long long ii = ((i % m) + m) % m;
      IntVector out = IntVector::Zero(d);
      for (long long j = 0; j < d; ++j) {
        const long long e = (ii * j) % m;
        if (e < d) {
          out(e) += x[static_cast<int>(j)];
        } else {
          out(e - d) -= x[static_cast<int>(j)];
        }
      }
      return RingElement(ring, std::move(out));
    }
    case RingKind::QuadSqrt2: {
      const long long r = ((i % 8) + 8) % 8;
      if (r == 1 || r == 7) return x;
      return RingElement(ring, (IntVector(2) << x[0], -x[1]).finished());
    }
    case RingKind::QuarticTheta: {
      const long long r = ((i % 16) + 16) % 16;
      RingElement image = RingElement::from_coeffs(ring, {0, 1, 0, 0});
      if (r == 3 || r == 5 || r == 11 || r == 13) image = RingElement::from_coeffs(ring, {0, 3, 0, 1});
      if (r == 9 || r == 15 || r == 11 || r == 13) image = -image;
      return evaluate_at(x, image);
    }
  }
  throw invalid();
}

RingElement conjugate(const RingElement& x) {
  if (x.ring().kind() == RingKind::QuadSqrt2) return x;
  return apply_automorphism(x, -1);
}

std::vector<long long> automorphism_indices(const RingTag& ring) {
  switch (ring.kind()) {
    case RingKind::Cyclotomic: {
      std::vector<long long> out;
      for (long long i = 1; i < 2LL * ring.degree(); i += 2) out.push_back(i);
      return out;
    }
    case RingKind::QuadSqrt2:
      return {1, 3};
    case RingKind::QuarticTheta:
      // (Z/16)^x modulo the subgroup {1, 7} fixing theta.
      return {1, 3, 9, 11};
  }
  return {};
}

IntMatrix multiplication_matrix(const RingElement& x) {
  const int d = x.degree();
  IntMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    IntVector e = IntVector::Zero(d);
    e(j) = 1;
    m.row(j) = mul(x, RingElement(x.ring(), std::move(e))).coeffs().transpose();
  }
  return m;
}

Integer trace(const RingElement& x) { return multiplication_matrix(x).trace(); }

Integer field_norm(const RingElement& x) { return bareiss_determinant(multiplication_matrix(x)); }

// ---------------------------------------------------------------------------
// Canonical embedding lengths

IntMatrix canonical_form_from_traces(const RingTag& ring) {
  const int d = ring.degree();
  std::vector<RingElement> basis;
  for (int j = 0; j < d; ++j) {
    IntVector e = IntVector::Zero(d);
    e(j) = 1;
    basis.emplace_back(ring, std::move(e));
  }
  IntMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = trace(mul(basis[i], conjugate(basis[j])));
  }
  return g;
}

const IntMatrix& canonical_form(const RingTag& ring) {
  static std::mutex lock;
  static std::map<std::pair<int, int>, IntMatrix> cache;
  const std::pair<int, int> key{static_cast<int>(ring.kind()), ring.level()};
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(key);
  if (it == cache.end()) {
    IntMatrix g;
    if (ring.is_cyclotomic()) {
      g = Integer(ring.degree()) * IntMatrix::Identity(ring.degree(), ring.degree());
    } else {
      g = canonical_form_from_traces(ring);
    }
    it = cache.emplace(key, std::move(g)).first;
  }
  return it->second;
}

Integer canonical_inner(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  if (x.ring().is_cyclotomic()) return Integer(x.degree()) * x.coeffs().dot(y.coeffs());
  return x.coeffs().dot(canonical_form(x.ring()) * y.coeffs());
}

Integer canonical_sq_length(const RingElement& x) { return canonical_inner(x, x); }

// ---------------------------------------------------------------------------
// Tower

bool embeds(const RingTag& from, const RingTag& to) {
  if (from == to) return true;
  switch (to.kind()) {
    case RingKind::Cyclotomic:
      if (from.is_cyclotomic()) return from.level() <= to.level();
      if (from.kind() == RingKind::QuadSqrt2) return to.level() >= 2;
      return to.level() >= 3;
    case RingKind::QuarticTheta:
      return from.kind() == RingKind::QuadSqrt2;
    case RingKind::QuadSqrt2:
      return false;
  }
  return false;
}

RingElement generator_image(const RingTag& from, const RingTag& to) {
  if (!embeds(from, to)) {
    throw DomainError("no_embedding", "no tower homomorphism from " + from.name() + " to " + to.name());
  }
  if (from == to) return RingElement::generator(to);
  if (to.kind() == RingKind::QuarticTheta) return RingElement::from_coeffs(to, {2, 0, 1, 0});
  const int n = to.level();
  switch (from.kind()) {
    case RingKind::Cyclotomic:
      return cyclotomic_monomials(to, {{1LL << (n - from.level()), 1}});
    case RingKind::QuadSqrt2: {
      const long long s = 1LL << (n - 2);
      return cyclotomic_monomials(to, {{s, 1}, {3 * s, -1}});
    }
    case RingKind::QuarticTheta: {
      const long long t = 1LL << (n - 3);
      return cyclotomic_monomials(to, {{t, 1}, {7 * t, 1}});
    }
  }
  throw DomainError("no_embedding", "no tower homomorphism");
}

RingElement lift_element(const RingElement& x, const RingTag& target) {
  if (x.ring() == target) return x;
  if (x.ring().is_cyclotomic() && target.is_cyclotomic() && embeds(x.ring(), target)) {
    const int stride = 1 << (target.level() - x.ring().level());
    IntVector out = IntVector::Zero(target.degree());
    for (int j = 0; j < x.degree(); ++j) out(j * stride) = x[j];
    return RingElement(target, std::move(out));
  }
  return evaluate_at(x, generator_image(x.ring(), target));
}

// ---------------------------------------------------------------------------
// Units

long long torsion_order(const RingTag& ring) { return ring.is_cyclotomic() ? 2LL * ring.degree() : 2; }

RingElement torsion_generator(const RingTag& ring) {
  if (ring.is_cyclotomic()) return RingElement::generator(ring);
  return RingElement::constant(ring, Integer(-1));
}

RingElement fundamental_unit(const RingTag& ring) {
  if (ring.is_cyclotomic() && ring.level() == 1) {
    throw DomainError("no_fundamental_unit", "Z[i] has no unit of infinite order");
  }
  return lift_element(RingElement::from_coeffs(RingTag::quad_sqrt2(), {1, 1}), ring);
}

RingElement fundamental_unit_inverse(const RingTag& ring) {
  if (ring.is_cyclotomic() && ring.level() == 1) {
    throw DomainError("no_fundamental_unit", "Z[i] has no unit of infinite order");
  }
  return lift_element(RingElement::from_coeffs(RingTag::quad_sqrt2(), {-1, 1}), ring);
}

RingElement unit(const RingTag& ring, long long torsion_k, long long eps_n) {
  const long long order = torsion_order(ring);
  const long long k = ((torsion_k % order) + order) % order;
  RingElement u = power(torsion_generator(ring), static_cast<unsigned>(k));
  if (eps_n > 0) u = mul(u, power(fundamental_unit(ring), static_cast<unsigned>(eps_n)));
  if (eps_n < 0) u = mul(u, power(fundamental_unit_inverse(ring), static_cast<unsigned>(-eps_n)));
  return u;
}

std::string to_string(const RingElement& x) {
  std::string symbol;
  switch (x.ring().kind()) {
    case RingKind::Cyclotomic:
      symbol = x.ring().level() == 1 ? "i" : "zeta";
      break;
    case RingKind::QuadSqrt2:
      symbol = "sqrt2";
      break;
    case RingKind::QuarticTheta:
      symbol = "theta";
      break;
  }
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < x.degree(); ++j) {
    const Integer& c = x[j];
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << symbol;
    if (j > 1) out << "^" << j;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace cyclosvp
