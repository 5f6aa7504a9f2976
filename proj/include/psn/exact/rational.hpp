#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psn::exact {

using Integer = mpz_class;
/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// num/den in lowest terms (the two-argument mpq_class constructor does not canonicalize).
Rational ratio(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& s, const RatVector& v);
bool is_zero(const RatVector& v);

/// Rescales v to a primitive integer vector with the same direction.
RatVector primitive_integer(const RatVector& v);

Rational pow(const Rational& base, unsigned exponent);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const RatVector& v);

} // namespace psn::exact
