#ifndef CYCLOSVP_LINALG_HPP
#define CYCLOSVP_LINALG_HPP

// Exact integer lattice kernels, templated on the scalar type. Every routine
// works on Eigen dense matrices of an exact integer type (Integer, or a
// builtin integer when entries are known to stay small) and never touches
// floating point.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclosvp/error.hpp"
#include "cyclosvp/integer.hpp"

namespace cyclosvp {

namespace detail {

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Nearest integer to a / b, halves rounded up. Requires b > 0.
template <typename Scalar>
Scalar round_div(const Scalar& a, const Scalar& b) {
  return floor_div<Scalar>(Scalar(2) * a + b, Scalar(2) * b);
}

template <typename Scalar>
Scalar abs(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

inline Integer round_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return cyclosvp::floor_div(2 * num + den, 2 * den);
}

}  // namespace detail

/// Fraction-free Gaussian elimination; exact for any integral scalar.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Hermite normal form of the lattice spanned by the rows of `generators`.
/// Result is square, lower triangular with positive diagonal, and every
/// entry left of the diagonal lies in [0, diagonal of its column). Throws
/// DomainError when the rows do not span a full-rank lattice.
template <typename Derived>
Matrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& generators) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = generators.cols();
  std::vector<RowVector<Scalar>> rows;
  for (Eigen::Index i = 0; i < generators.rows(); ++i) {
    if (!generators.row(i).isZero()) rows.emplace_back(generators.row(i));
  }
  Matrix<Scalar> h = Matrix<Scalar>::Zero(d, d);
  for (Eigen::Index col = d - 1; col >= 0; --col) {
    for (;;) {
      std::size_t pivot = rows.size();
      int nonzero = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i](col) == 0) continue;
        ++nonzero;
        if (pivot == rows.size() || detail::abs(rows[i](col)) < detail::abs(rows[pivot](col))) {
          pivot = i;
        }
      }
      if (nonzero == 0) throw DomainError("not_full_rank", "generators do not span a full-rank lattice");
      if (nonzero > 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i == pivot || rows[i](col) == 0) continue;
          const Scalar q = rows[i](col) / rows[pivot](col);
          rows[i] -= q * rows[pivot];
        }
        continue;
      }
      RowVector<Scalar> r = rows[pivot];
      if (r(col) < 0) r = -r;
      h.row(col) = r;
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
      break;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const RowVector<Scalar>& r) { return r.isZero(); }),
               rows.end());
  }
  for (Eigen::Index i = 1; i < d; ++i) {
    for (Eigen::Index j = i - 1; j >= 0; --j) {
      const Scalar q = detail::floor_div<Scalar>(h(i, j), h(j, j));
      if (q != 0) h.row(i) -= q * h.row(j);
    }
  }
  return h;
}

/// Solves x * hnf = v for integer x; false when v is not in the lattice.
template <typename Scalar>
bool solve_lower_triangular(const Matrix<Scalar>& hnf, const RowVector<Scalar>& v, RowVector<Scalar>* x) {
  const Eigen::Index d = hnf.rows();
  RowVector<Scalar> rest = v;
  RowVector<Scalar> coords = RowVector<Scalar>::Zero(d);
  for (Eigen::Index j = d - 1; j >= 0; --j) {
    if (rest(j) % hnf(j, j) != 0) return false;
    coords(j) = rest(j) / hnf(j, j);
    if (coords(j) != 0) rest -= coords(j) * hnf.row(j);
  }
  if (x) *x = coords;
  return true;
}

/// Lagrange-Gauss reduction of a rank-2 Gram matrix. Returns the unimodular
/// U with U * gram * U^T reduced: g00 <= g11 and |2 g01| <= g00.
template <typename Scalar>
Matrix<Scalar> gauss_reduce_gram(const Matrix<Scalar>& gram) {
  Matrix<Scalar> g = gram;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(2, 2);
  for (;;) {
    if (g(1, 1) < g(0, 0)) {
      u.row(0).swap(u.row(1));
      std::swap(g(0, 0), g(1, 1));
    }
    const Scalar q = detail::round_div<Scalar>(g(0, 1), g(0, 0));
    if (q == 0) break;
    u.row(1) -= q * u.row(0);
    g(1, 1) = g(1, 1) - Scalar(2) * q * g(0, 1) + q * q * g(0, 0);
    g(0, 1) = g(0, 1) - q * g(0, 0);
    g(1, 0) = g(0, 1);
  }
  return u;
}

/// Integral LLL on a Gram matrix (all-integer variant: d_i and lambda_ij
/// are integers throughout). delta = delta_num / delta_den. Returns the
/// unimodular transform U; the reduced Gram matrix is U * gram * U^T.
template <typename Scalar>
Matrix<Scalar> lll_reduce_gram(const Matrix<Scalar>& gram, long delta_num = 99, long delta_den = 100) {
  const Eigen::Index n = gram.rows();
  Matrix<Scalar> u = Matrix<Scalar>::Identity(n, n);
  if (n < 2) return u;
  Matrix<Scalar> g = gram;
  // 1-based indices below, matching the usual presentation.
  std::vector<Scalar> d(static_cast<std::size_t>(n) + 1, Scalar(0));
  Matrix<Scalar> lam = Matrix<Scalar>::Zero(n + 1, n + 1);
  auto G = [&](Eigen::Index i, Eigen::Index j) -> Scalar& { return g(i - 1, j - 1); };

  auto subtract = [&](Eigen::Index k, Eigen::Index l, const Scalar& q) {
    u.row(k - 1) -= q * u.row(l - 1);
    g.row(k - 1) -= q * g.row(l - 1);
    g.col(k - 1) -= q * g.col(l - 1);
  };
  auto red = [&](Eigen::Index k, Eigen::Index l) {
    if (Scalar(2) * detail::abs(lam(k, l)) <= d[l]) return;
    const Scalar q = detail::round_div<Scalar>(lam(k, l), d[l]);
    subtract(k, l, q);
    lam(k, l) -= q * d[l];
    for (Eigen::Index i = 1; i < l; ++i) lam(k, i) -= q * lam(l, i);
  };
  Eigen::Index kmax = 1;
  auto swap_rows = [&](Eigen::Index k) {
    u.row(k - 1).swap(u.row(k - 2));
    g.row(k - 1).swap(g.row(k - 2));
    g.col(k - 1).swap(g.col(k - 2));
    for (Eigen::Index j = 1; j <= k - 2; ++j) std::swap(lam(k, j), lam(k - 1, j));
    const Scalar l = lam(k, k - 1);
    const Scalar b = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (Eigen::Index i = k + 1; i <= kmax; ++i) {
      const Scalar t = lam(i, k);
      lam(i, k) = (d[k] * lam(i, k - 1) - l * t) / d[k - 1];
      lam(i, k - 1) = (b * t + l * lam(i, k)) / d[k];
    }
    d[k - 1] = b;
  };

  d[0] = 1;
  d[1] = G(1, 1);
  Eigen::Index k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (Eigen::Index j = 1; j <= k; ++j) {
        Scalar acc = G(k, j);
        for (Eigen::Index i = 1; i < j; ++i) acc = (d[i] * acc - lam(k, i) * lam(j, i)) / d[i - 1];
        if (j < k) {
          lam(k, j) = acc;
        } else {
          if (acc == 0) throw DomainError("not_full_rank", "LLL input vectors are dependent");
          d[k] = acc;
        }
      }
    }
    for (;;) {
      red(k, k - 1);
      const Scalar lhs = Scalar(delta_den) * d[k] * d[k - 2];
      const Scalar rhs = Scalar(delta_num) * d[k - 1] * d[k - 1] - Scalar(delta_den) * lam(k, k - 1) * lam(k, k - 1);
      if (lhs < rhs) {
        swap_rows(k);
        if (k > 2) --k;
        continue;
      }
      for (Eigen::Index l = k - 2; l >= 1; --l) red(k, l);
      ++k;
      break;
    }
  }
  return u;
}

/// Shortest nonzero vectors of a positive definite integer Gram matrix.
template <typename Scalar>
struct ShortVectors {
  Scalar sq_length;
  /// One representative per +/- pair: last nonzero coordinate positive.
  std::vector<Vector<Scalar>> coords;
  std::uint64_t nodes = 0;
};

/// Exact Fincke-Pohst / Schnorr-Euchner enumeration. Gram-Schmidt data are
/// exact rationals and every pruning decision is an exact comparison, so
/// the result is unconditional. Finds all vectors attaining the minimum,
/// provided it is <= radius_sq; otherwise throws RadiusExhausted. Best run
/// on an LLL-reduced Gram matrix.
template <typename Scalar>
ShortVectors<Scalar> fincke_pohst(const Matrix<Scalar>& gram, const Scalar& radius_sq) {
  const Eigen::Index n = gram.rows();
  std::vector<Rational> b(static_cast<std::size_t>(n));
  Matrix<Rational> mu = Matrix<Rational>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      Rational acc = Rational(Integer(gram(i, j)));
      for (Eigen::Index k = 0; k < j; ++k) acc -= mu(j, k) * mu(i, k) * b[k];
      mu(i, j) = acc / b[j];
    }
    Rational acc = Rational(Integer(gram(i, i)));
    for (Eigen::Index k = 0; k < i; ++k) acc -= mu(i, k) * mu(i, k) * b[k];
    if (acc <= 0) throw DomainError("not_positive_definite", "Gram matrix is not positive definite");
    b[i] = acc;
  }

  Rational radius = Rational(Integer(radius_sq));
  bool found = false;
  Rational best;
  std::vector<Vector<Integer>> minimizers;
  std::vector<Integer> x(static_cast<std::size_t>(n), Integer(0));
  std::uint64_t nodes = 0;

  // level i: coordinates i+1..n-1 fixed, `partial` their contribution,
  // `all_zero_above` whether they are all zero (sign normalization).
  auto visit = [&](auto&& self, Eigen::Index i, const Rational& partial, bool all_zero_above) -> void {
    Rational center = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (x[j] != 0) center -= mu(j, i) * Rational(x[j]);
    }
    const Integer start = detail::round_rational(center);
    // Zig-zag outward from the rounded center; each direction stops at the
    // first value exceeding the (possibly shrinking) radius.
    Integer up = start;
    Integer down = start - 1;
    bool up_live = true;
    bool down_live = !all_zero_above || down >= 0;
    if (all_zero_above && up < 0) {
      up = 0;
    }
    while (up_live || down_live) {
      bool take_up;
      if (up_live && down_live) {
        const Rational du = Rational(up) - center;
        const Rational dd = center - Rational(down);
        take_up = du <= dd;
      } else {
        take_up = up_live;
      }
      Integer xi = take_up ? up : down;
      const Rational offset = Rational(xi) - center;
      const Rational len = partial + b[i] * offset * offset;
      ++nodes;
      if (len > radius) {
        if (take_up) up_live = false; else down_live = false;
        continue;
      }
      if (take_up) ++up; else {
        --down;
        if (all_zero_above && down < 0) down_live = false;
      }
      x[i] = xi;
      const bool zero_here = all_zero_above && xi == 0;
      if (i == 0) {
        if (zero_here) continue;
        if (!found || len < best) {
          found = true;
          best = len;
          radius = len;
          minimizers.clear();
        }
        if (len == best) {
          Vector<Integer> v(n);
          for (Eigen::Index t = 0; t < n; ++t) v(t) = x[t];
          minimizers.push_back(std::move(v));
        }
      } else {
        self(self, i - 1, len, zero_here);
      }
    }
    x[i] = 0;
  };
  if (n > 0) visit(visit, n - 1, Rational(0), true);
  if (!found) throw RadiusExhausted("no nonzero lattice vector within the enumeration radius");

  ShortVectors<Scalar> out;
  out.sq_length = Scalar(boost::multiprecision::numerator(best));
  out.nodes = nodes;
  for (const auto& v : minimizers) out.coords.push_back(v.template cast<Scalar>());
  return out;
}

}  // namespace cyclosvp

#endif  // CYCLOSVP_LINALG_HPP
