#include "eqsing/numeric.hpp"

#include <cctype>
#include <limits>

#include "eqsing/error.hpp"

namespace eqsing {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::GcdChainViolation: return "GcdChainViolation";
    case ErrorCode::TrailingGcdNotOne: return "TrailingGcdNotOne";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::NotConvenient: return "NotConvenient";
    case ErrorCode::SplitTooDeep: return "SplitTooDeep";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::OrderExceedsDegree: return "OrderExceedsDegree";
    case ErrorCode::NonIntegralSubstitution: return "NonIntegralSubstitution";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EdgeNotOnPolygon: return "EdgeNotOnPolygon";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
  }
  return "Unknown";
}

Integer floor_div(const Integer& a, const Integer& d) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, d, q, r);
  if (r < 0) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& d) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, d, q, r);
  if (r > 0) ++q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& d) {
  Integer r = a % d;
  if (r < 0) r += d;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer ceil(const Rational& r) {
  return ceil_div(numerator_of(r), denominator_of(r));
}

std::optional<std::int64_t> try_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return v.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Integer& v) {
  auto r = try_int64(v);
  if (!r) throw Error(ErrorCode::Overflow, "integer " + v.str() + " exceeds 64 bits");
  return *r;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

std::string to_string(const Coeff& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Coeff parse_coeff(std::string_view text) { return to_coeff(parse_rational(text)); }

Coeff to_coeff(const Integer& v) { return Coeff(mpz_class(v.str())); }

Coeff to_coeff(const Rational& r) {
  Coeff c(mpz_class(numerator_of(r).str()), mpz_class(denominator_of(r).str()));
  c.canonicalize();
  return c;
}

Rational to_rational(const Coeff& c) {
  return Rational(Integer(c.get_num().get_str()), Integer(c.get_den().get_str()));
}

}  // namespace eqsing
