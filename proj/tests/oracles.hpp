#ifndef CYCLOSVP_TESTS_ORACLES_HPP
#define CYCLOSVP_TESTS_ORACLES_HPP

// Brute-force references. Nothing here calls into the library's algorithms:
// primality by trial division, roots by scanning, lengths and norms through
// floating-point complex embeddings, shortest vectors by box enumeration.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cyclosvp/rings.hpp"

namespace oracle {

using cyclosvp::Integer;
using cyclosvp::RingElement;
using cyclosvp::RingKind;
using cyclosvp::RingTag;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes_below(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p < bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

inline std::vector<std::int64_t> roots_mod(const std::vector<std::int64_t>& f, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ((acc * x + *it) % p + p) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

inline std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  for (std::int64_t r = 1; r <= p / 2; ++r) {
    if (r * r % p == a) return r;
  }
  return std::nullopt;
}

/// Minimal positive solution (a, b) of a^2 - 2b^2 = sign * p by a plain
/// double loop over a small box.
inline std::optional<std::pair<std::int64_t, std::int64_t>> pell(std::int64_t p, int sign, std::int64_t box) {
  for (std::int64_t a = 1; a <= box; ++a) {
    for (std::int64_t b = 1; b <= box; ++b) {
      if (a * a - 2 * b * b == sign * p) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

/// Images of the power-basis generator under every field embedding.
inline std::vector<std::complex<long double>> generator_embeddings(const RingTag& ring) {
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<std::complex<long double>> out;
  switch (ring.kind()) {
    case RingKind::Cyclotomic: {
      const long long m = 2LL * ring.degree();
      for (long long t = 1; t < m; t += 2) out.push_back(std::polar(1.0L, 2 * pi * t / m));
      break;
    }
    case RingKind::QuadSqrt2:
      out = {std::sqrt(2.0L), -std::sqrt(2.0L)};
      break;
    case RingKind::QuarticTheta:
      for (int t : {1, 3, 9, 11}) out.push_back(std::polar(1.0L, 2 * pi * t / 16) + std::polar(1.0L, 2 * pi * 7 * t / 16));
      break;
  }
  return out;
}

inline std::vector<std::complex<long double>> embed(const RingElement& x) {
  std::vector<std::complex<long double>> out;
  for (const auto& g : generator_embeddings(x.ring())) {
    std::complex<long double> acc = 0;
    for (int j = x.degree() - 1; j >= 0; --j) acc = acc * g + x[j].convert_to<long double>();
    out.push_back(acc);
  }
  return out;
}

inline long double sq_length(const RingElement& x) {
  long double s = 0;
  for (const auto& z : embed(x)) s += std::norm(z);
  return s;
}

inline long double norm(const RingElement& x) {
  std::complex<long double> prod = 1;
  for (const auto& z : embed(x)) prod *= z;
  return prod.real();
}

inline long long rounded(long double v) { return std::llround(v); }

/// Shortest nonzero element satisfying `member` by box enumeration. The box
/// half-width is derived from `radius_sq` and the smallest eigenvalue of the
/// numeric trace form, so every vector of squared length <= radius_sq is
/// visited. Returns the minimal squared length, or nullopt if none.
inline std::optional<long long> shortest_in_box(const RingTag& ring, const std::function<bool(const RingElement&)>& member,
                                                long long radius_sq, long long* count = nullptr) {
  const int d = ring.degree();
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cyclosvp::IntVector ei = cyclosvp::IntVector::Zero(d);
      cyclosvp::IntVector ej = cyclosvp::IntVector::Zero(d);
      ei(i) = 1;
      ej(j) = 1;
      const auto a = embed(RingElement(ring, ei));
      const auto b = embed(RingElement(ring, ej));
      long double s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] * std::conj(b[k])).real();
      gram(i, j) = static_cast<double>(s);
    }
  }
  const double lambda_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues().minCoeff();
  const long long half = static_cast<long long>(std::floor(std::sqrt(radius_sq / lambda_min) + 1e-9));
  std::vector<long long> c(static_cast<std::size_t>(d), -half);
  std::optional<long long> best;
  long long hits = 0;
  for (;;) {
    bool zero = true;
    for (long long v : c) zero = zero && v == 0;
    if (!zero) {
      cyclosvp::IntVector v(d);
      for (int i = 0; i < d; ++i) v(i) = c[static_cast<std::size_t>(i)];
      const RingElement x(ring, v);
      const long long len = rounded(sq_length(x));
      if (len <= radius_sq && member(x)) {
        if (!best || len < *best) {
          best = len;
          hits = 0;
        }
        if (len == *best) ++hits;
      }
    }
    int i = 0;
    while (i < d && c[static_cast<std::size_t>(i)] == half) c[static_cast<std::size_t>(i++)] = -half;
    if (i == d) break;
    ++c[static_cast<std::size_t>(i)];
  }
  if (count) *count = hits;
  return best;
}

/// x(r) = 0 mod p, evaluated directly on the coefficient polynomial.
inline bool vanishes_at(const RingElement& x, std::int64_t r, std::int64_t p) {
  Integer acc = 0;
  for (int j = x.degree() - 1; j >= 0; --j) acc = (acc * r + x[j]) % p;
  return acc == 0;
}

}  // namespace oracle

#endif  // CYCLOSVP_TESTS_ORACLES_HPP
