#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqsing {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  Overflow,
  // charclass
  NotStrictlyIncreasing,
  GcdChainViolation,
  TrailingGcdNotOne,
  IndexOutOfRange,
  // contfrac / diagram
  InvalidRange,
  NotCoprime,
  EmptySupport,
  InvalidDiagram,
  NotConvenient,
  SplitTooDeep,
  // puiseux
  IndexMismatch,
  TruncationTooShort,
  OrderExceedsDegree,
  NonIntegralSubstitution,
  ZeroPolynomial,
  EdgeNotOnPolygon,
  // polar / verify
  OrderOutOfRange,
  OrderTooLarge,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqsing
