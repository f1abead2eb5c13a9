#ifndef CYCLOSVP_DECIMAL_HPP
#define CYCLOSVP_DECIMAL_HPP

#include <string>

#include "cyclosvp/integer.hpp"

namespace cyclosvp {

/// x^(1/k) rendered in fixed notation with `digits` significant digits,
/// rounded to nearest with ties to even (MPFR at 512 bits).
std::string decimal_root(const Integer& x, unsigned long k, int digits = 12);

/// scale * x^(1/k).
std::string decimal_scaled_root(const Integer& scale, const Integer& x, unsigned long k, int digits = 12);

}  // namespace cyclosvp

#endif  // CYCLOSVP_DECIMAL_HPP
