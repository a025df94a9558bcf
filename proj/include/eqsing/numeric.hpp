#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <gmpxx.h>

namespace eqsing {

// Combinatorial data (characteristics, lattice coordinates, contacts) uses
// cpp_int, which stores small values inline. Polynomial coefficients use GMP.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Coeff = mpq_class;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Quotient rounded toward negative infinity; `d` must be positive.
Integer floor_div(const Integer& a, const Integer& d);
// Quotient rounded toward positive infinity; `d` must be positive.
Integer ceil_div(const Integer& a, const Integer& d);
// Nonnegative remainder of `a` modulo positive `d`.
Integer mod_floor(const Integer& a, const Integer& d);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Ceiling of a rational.
Integer ceil(const Rational& r);

// Narrowing conversion; throws Error(ErrorCode::Overflow) if the value does
// not fit.
std::int64_t to_int64(const Integer& v);
std::optional<std::int64_t> try_int64(const Integer& v);

// Reduced-fraction notation: "p/q", or "p" when q = 1.
std::string to_string(const Integer& v);
std::string to_string(const Rational& r);
std::string to_string(const Coeff& c);

Integer parse_integer(std::string_view text);
// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);
Coeff parse_coeff(std::string_view text);

Coeff to_coeff(const Integer& v);
Coeff to_coeff(const Rational& r);
Rational to_rational(const Coeff& c);

}  // namespace eqsing
