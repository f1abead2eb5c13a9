#include "cyclosvp/ntheory.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "cyclosvp/error.hpp"

namespace cyclosvp {

namespace {

constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& a) {
  Integer x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Integer powmod(const Integer& base, const Integer& exp, const Integer& m) {
  return boost::multiprecision::powm(mod(base, m), exp, m);
}

Primality primality(const Integer& n) {
  if (n < 2) return Primality::Composite;
  for (unsigned w : kWitnesses) {
    if (n == w) return Primality::Prime;
    if (n % w == 0) return Primality::Composite;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned w : kWitnesses) {
    if (!miller_rabin_round(n, d, s, Integer(w))) return Primality::Composite;
  }
  static const Integer kDeterministicLimit = Integer(1) << 64;
  if (n < kDeterministicLimit) return Primality::Prime;
  // Fixed bases are not enough past 2^64; add GMP's randomized rounds.
  if (mpz_probab_prime_p(n.backend().data(), 25) == 0) return Primality::Composite;
  return Primality::ProbablePrime;
}

bool is_prime(const Integer& n) {
  if (n < 2) throw DomainError("not_prime", "is_prime requires n >= 2");
  return primality(n) != Primality::Composite;
}

int legendre(const Integer& a, const Integer& p) {
  Integer r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::optional<Integer> sqrt_mod(const Integer& a_in, const Integer& p) {
  if (p < 3 || (p & 1) == 0) throw DomainError("not_odd_prime", "sqrt_mod requires an odd prime modulus");
  const Integer a = mod(a_in, p);
  if (a == 0) throw DomainError("not_coprime", "sqrt_mod requires gcd(a, p) = 1");
  if (legendre(a, p) != 1) return std::nullopt;

  Integer r;
  if (a == 2 && p % 8 == 7) {
    r = powmod(Integer(2), (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Integer q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    Integer z = 2;
    while (legendre(z, p) != -1) ++z;
    unsigned m = s;
    Integer c = powmod(z, q, p);
    Integer t = powmod(a, q, p);
    r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      Integer t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        if (++i == m) throw DomainError("not_prime", "Tonelli-Shanks failed: modulus is not prime");
      }
      Integer b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      r = r * b % p;
    }
  }
  if (r * r % p != a) throw DomainError("not_prime", "square root check failed: modulus is not prime");
  return std::min(r, p - r);
}

// ---------------------------------------------------------------------------

std::string SplittingLevel::behaviour() const {
  if (primes == 1 && residue_degree == degree) return "inert";
  if (primes == degree) return "splits completely";
  return "splits partially";
}

std::string ResidueClass::covered_class() const {
  if (class_mod8 == 3 || class_mod8 == 5) return std::to_string(class_mod8) + " mod 8";
  if (class_mod16 == 7 || class_mod16 == 9) return std::to_string(class_mod16) + " mod 16";
  return "";
}

ResidueClass classify_prime(const Integer& p) {
  if (p == 2) {
    throw DomainError("ramified_unsupported", "p = 2 ramifies in every ring of the tower");
  }
  if (p < 2 || !is_prime(p)) throw DomainError("not_prime", "p must be an odd prime");

  ResidueClass rc;
  rc.p = p;
  rc.class_mod8 = static_cast<int>(p % 8);
  rc.class_mod16 = static_cast<int>(p % 16);
  rc.supported = rc.class_mod8 == 3 || rc.class_mod8 == 5 || rc.class_mod16 == 7 ||
                 rc.class_mod16 == 9;

  // Each field is the fixed field of a subgroup H of (Z/m)^x; the residue
  // degree is the order of p in (Z/m)^x / H.
  struct Field {
    const char* name;
    int modulus;
    int degree;
    std::array<int, 2> subgroup;
    int over;  // index of the subfield below, -1 for Q
  };
  static constexpr std::array<Field, 6> kTower = {{
      {"Q(i)", 4, 2, {1, 1}, -1},
      {"Q(sqrt2)", 8, 2, {1, 7}, -1},
      {"Q(zeta8)", 8, 4, {1, 1}, 1},
      {"Q(zeta16+zeta16^7)", 16, 4, {1, 7}, 1},
      {"Q(zeta16)", 16, 8, {1, 1}, 2},
      {"Q(zeta32)", 32, 16, {1, 1}, 4},
  }};
  for (const Field& f : kTower) {
    const int base = static_cast<int>(p % f.modulus);
    int power = base;
    int order = 1;
    while (power != f.subgroup[0] && power != f.subgroup[1]) {
      power = power * base % f.modulus;
      ++order;
    }
    SplittingLevel level{f.name, "Q", f.degree, f.degree / order, order, ""};
    int below_primes = 1;
    int below_degree = 1;
    if (f.over >= 0) {
      level.over = rc.splitting[f.over].field;
      below_primes = rc.splitting[f.over].primes;
      below_degree = rc.splitting[f.over].degree;
    }
    const int ratio = level.primes / below_primes;
    if (ratio == 1) {
      level.relative = "inert";
    } else if (ratio == f.degree / below_degree) {
      level.relative = "splits";
    } else {
      level.relative = "splits partially";
    }
    rc.splitting.push_back(level);
  }
  return rc;
}

// ---------------------------------------------------------------------------
// F_p[x]

PolyModP poly_reduce(PolyModP f, const Integer& p) {
  for (auto& c : f) c = mod(c, p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_degree(const PolyModP& f) { return static_cast<int>(f.size()) - 1; }

namespace {

PolyModP poly_sub(const PolyModP& a, const PolyModP& b, const Integer& p) {
  PolyModP r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_reduce(std::move(r), p);
}

Integer inverse_mod(const Integer& a, const Integer& p) { return powmod(a, p - 2, p); }

PolyModP make_monic(PolyModP f, const Integer& p) {
  if (f.empty()) return f;
  const Integer inv = inverse_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

void poly_divmod(const PolyModP& a, const PolyModP& b, const Integer& p, PolyModP* quo,
                 PolyModP* rem) {
  if (b.empty()) throw DomainError("division_by_zero", "polynomial division by zero");
  PolyModP r = poly_reduce(a, p);
  const int db = poly_degree(b);
  const Integer lead_inv = inverse_mod(b.back(), p);
  PolyModP q(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, Integer(0));
  while (poly_degree(r) >= db) {
    const int shift = poly_degree(r) - db;
    const Integer c = r.back() * lead_inv % p;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] = mod(r[shift + i] - c * b[i], p);
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (quo) *quo = poly_reduce(std::move(q), p);
  if (rem) *rem = std::move(r);
}

PolyModP poly_powmod(PolyModP base, Integer e, const PolyModP& modulus, const Integer& p) {
  PolyModP result{Integer(1)};
  base = poly_rem(base, modulus, p);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_rem(poly_mul(result, base, p), modulus, p);
    base = poly_rem(poly_mul(base, base, p), modulus, p);
    e >>= 1;
  }
  return result;
}

PolyModP derivative(const PolyModP& f, const Integer& p) {
  PolyModP d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Integer(i));
  return poly_reduce(std::move(d), p);
}

bool poly_less(const PolyModP& a, const PolyModP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// degree-e irreducibles, p odd.
void equal_degree_split(const PolyModP& f, int e, const Integer& p, std::mt19937_64& rng,
                        std::vector<PolyModP>& out) {
  const int d = poly_degree(f);
  if (d == e) {
    out.push_back(f);
    return;
  }
  const Integer exponent = (ipow(p, static_cast<unsigned>(e)) - 1) / 2;
  for (;;) {
    PolyModP a(static_cast<std::size_t>(d), Integer(0));
    for (auto& c : a) {
      Integer r = 0;
      for (int w = 0; w < 4; ++w) r = (r << 64) + Integer(rng());
      c = mod(r, p);
    }
    a = poly_reduce(std::move(a), p);
    if (poly_degree(a) < 1) continue;
    PolyModP g = poly_gcd(a, f, p);
    if (poly_degree(g) > 0 && poly_degree(g) < d) {
      equal_degree_split(g, e, p, rng, out);
      equal_degree_split(poly_quo(f, g, p), e, p, rng, out);
      return;
    }
    PolyModP h = poly_sub(poly_powmod(a, exponent, f, p), PolyModP{Integer(1)}, p);
    g = poly_gcd(h, f, p);
    if (poly_degree(g) > 0 && poly_degree(g) < d) {
      equal_degree_split(g, e, p, rng, out);
      equal_degree_split(poly_quo(f, g, p), e, p, rng, out);
      return;
    }
  }
}

// Exhaustive search over monic polynomials; only used when f is not
// squarefree mod p, which for the rings here means p = 2.
std::vector<PolyModP> brute_force_factors(const PolyModP& f, const Integer& p) {
  const int d = poly_degree(f);
  if (ipow(p, static_cast<unsigned>(d)) > 1u << 20) {
    throw DomainError("factorization_unsupported", "factorization of a non-squarefree polynomial needs small p");
  }
  const long pl = p.convert_to<long>();
  std::vector<PolyModP> found;
  for (int e = 1; e <= d; ++e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= pl;
    for (long idx = 0; idx < count; ++idx) {
      PolyModP g(static_cast<std::size_t>(e) + 1, Integer(0));
      long t = idx;
      for (int i = 0; i < e; ++i) {
        g[i] = t % pl;
        t /= pl;
      }
      g[e] = 1;
      PolyModP rem;
      poly_divmod(f, g, p, nullptr, &rem);
      if (!rem.empty()) continue;
      bool irreducible = true;
      for (const auto& h : found) {
        if (2 * poly_degree(h) > e) continue;
        PolyModP r2;
        poly_divmod(g, h, p, nullptr, &r2);
        if (r2.empty()) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) found.push_back(g);
    }
  }
  return found;
}

}  // namespace

PolyModP poly_mul(const PolyModP& a, const PolyModP& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  PolyModP r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_reduce(std::move(r), p);
}

PolyModP poly_rem(const PolyModP& a, const PolyModP& b, const Integer& p) {
  PolyModP r;
  poly_divmod(a, b, p, nullptr, &r);
  return r;
}

PolyModP poly_quo(const PolyModP& a, const PolyModP& b, const Integer& p) {
  PolyModP q;
  poly_divmod(a, b, p, &q, nullptr);
  return q;
}

PolyModP poly_gcd(PolyModP a, PolyModP b, const Integer& p) {
  a = poly_reduce(std::move(a), p);
  b = poly_reduce(std::move(b), p);
  while (!b.empty()) {
    PolyModP r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Integer poly_eval(const PolyModP& f, const Integer& x, const Integer& p) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod(acc * x + *it, p);
  return acc;
}

std::vector<PolyModP> irreducible_factors(const PolyModP& f_in, const Integer& p) {
  PolyModP f = make_monic(poly_reduce(f_in, p), p);
  if (poly_degree(f) < 1) return {};
  std::vector<PolyModP> out;
  if (p == 2 || poly_degree(poly_gcd(f, derivative(f, p), p)) > 0) {
    out = brute_force_factors(f, p);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    const PolyModP x{Integer(0), Integer(1)};
    PolyModP h = x;
    for (int e = 1; 2 * e <= poly_degree(f); ++e) {
      h = poly_powmod(h, p, f, p);
      PolyModP g = poly_gcd(poly_sub(h, x, p), f, p);
      if (poly_degree(g) > 0) {
        equal_degree_split(g, e, p, rng, out);
        f = poly_quo(f, g, p);
        h = poly_rem(h, f, p);
      }
    }
    if (poly_degree(f) > 0) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Integer> roots_mod(const PolyModP& f, const Integer& p) {
  std::vector<Integer> roots;
  for (const auto& g : irreducible_factors(f, p)) {
    if (poly_degree(g) == 1) roots.push_back(mod(-g[0], p));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cyclosvp
