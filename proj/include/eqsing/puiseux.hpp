#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "eqsing/charclass.hpp"
#include "eqsing/numeric.hpp"

namespace eqsing {

class BivariatePoly;

// Result of an order computation on a possibly truncated series.
struct Order {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Infinite;
  Rational value;  // exponent for Finite, lower bound for AtLeast

  static Order finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  static Order infinite() { return {Kind::Infinite, Rational(0)}; }
  static Order at_least(Rational v) { return {Kind::AtLeast, std::move(v)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
  friend bool operator==(const Order&, const Order&) = default;
};

// sum a_i x^{i/n} over i < trunc_bound (all exponents when untruncated).
class PuiseuxSeries {
 public:
  using Terms = std::map<std::int64_t, Coeff>;

  PuiseuxSeries() = default;
  // Zero coefficients are dropped, terms at or beyond the bound rejected.
  PuiseuxSeries(std::int64_t denom, Terms terms,
                std::optional<std::int64_t> trunc_bound = std::nullopt);

  // "x^(4/3)+x^2-3/2*x^(7/5)+x"; the working denominator is the lcm of
  // the exponent denominators.
  static PuiseuxSeries parse(std::string_view text);

  std::int64_t denom() const { return denom_; }
  const Terms& terms() const { return terms_; }
  const std::optional<std::int64_t>& trunc_bound() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(std::int64_t i) const;

  // Same series over a denominator that is a multiple of denom().
  PuiseuxSeries with_denom(std::int64_t n) const;
  // Smallest denominator the series lives in.
  std::int64_t index() const;
  PuiseuxSeries reduce() const { return with_denom_divisor(index()); }

  Order ord() const;

  // Terms of exponent < cutoff; nullopt cutoff keeps everything.
  PuiseuxSeries truncate_below(const std::optional<Rational>& cutoff) const;

  // Throws IndexMismatch when the series lives in a smaller ring than
  // denom() claims, TruncationTooShort when the gcd chain stalls before
  // the truncation bound.
  CharSequence characteristic() const;

  // Number of distinct conjugates x^{i/n} -> eps^i x^{i/n}, eps in U_n.
  std::int64_t distinct_conjugates() const;

  std::string to_string() const;
  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  PuiseuxSeries with_denom_divisor(std::int64_t d) const;

  std::int64_t denom_ = 1;
  Terms terms_;
  std::optional<std::int64_t> trunc_;
};

Order contact(const PuiseuxSeries& a, const PuiseuxSeries& b);
inline CharSequence characteristic_of(const PuiseuxSeries& a) { return a.characteristic(); }

// The conjugate alpha_eps for eps = exp(2 pi i r / n). Coefficients become
// a_i eps^{i}; only the phase (r i mod n) is tracked, never materialized.
struct Conjugate {
  std::int64_t n = 1;
  std::int64_t r = 0;

  bool is_identity() const { return r % n == 0; }
  // eps^i as the residue r*i mod n.
  std::int64_t phase(std::int64_t i) const;
  // eps^i when it is rational (+1 or -1).
  std::optional<int> rational_unit(std::int64_t i) const;
};

Conjugate conjugate(const PuiseuxSeries& a, std::int64_t eps_index);

// Monic degree-n polynomial prod_eps (y - alpha_eps) with n the index of
// `a`, reduced modulo x^{x_trunc}. Exact below the bound whenever `a` is
// untruncated; a truncated `a` lowers the bound to ceil(T/n).
// Throws TruncationTooShort when the usable bound does not reach past the
// order of the constant term.
BivariatePoly min_poly(const PuiseuxSeries& a, std::int64_t x_trunc);

}  // namespace eqsing
