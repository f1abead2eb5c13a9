#ifndef CYCLOSVP_INTEGER_HPP
#define CYCLOSVP_INTEGER_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace cyclosvp {

// Expression templates are disabled so that `auto` and Eigen's generic
// kernels always see concrete values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor of a / b for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nearest integer to a / b (b > 0), halves rounded up.
inline Integer round_div(const Integer& a, const Integer& b) {
  return floor_div(2 * a + b, 2 * b);
}

/// Floor of the square root, n >= 0.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Integer& n, Integer* root = nullptr) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline Integer pow2(unsigned e) {
  Integer r = 1;
  return r << e;
}

inline Integer ipow(Integer base, unsigned e) {
  Integer r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace cyclosvp

#endif  // CYCLOSVP_INTEGER_HPP
