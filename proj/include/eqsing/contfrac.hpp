#pragma once

#include <cstddef>
#include <vector>

#include "eqsing/numeric.hpp"

namespace eqsing {

// Finite continued fraction [h0; h1, ..., hs] with positive partial
// quotients and eagerly computed convergents p_i / q_i, i = -1..s
// (p_{-1} = 1, q_{-1} = 0).
class ContinuedFraction {
 public:
  // Classical (minimal length, h_s > 1 when s >= 1) expansion of m/n.
  // Requires 0 < n < m; throws Error(InvalidRange) otherwise.
  static ContinuedFraction expand(const Integer& m, const Integer& n);

  // Wraps an explicit quotient sequence; every quotient must be positive.
  static ContinuedFraction from_quotients(std::vector<Integer> h);

  // Same value with an even number s of steps: [.., h_s] -> [.., h_s - 1, 1].
  ContinuedFraction to_even_length() const;

  const std::vector<Integer>& quotients() const { return h_; }
  std::size_t length() const { return h_.size() - 1; }  // s
  const Integer& h(std::size_t i) const { return h_.at(i); }
  const Integer& p(std::ptrdiff_t i) const { return p_.at(static_cast<std::size_t>(i + 1)); }
  const Integer& q(std::ptrdiff_t i) const { return q_.at(static_cast<std::size_t>(i + 1)); }
  Rational value() const { return Rational(p_.back(), q_.back()); }

  friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
    return a.h_ == b.h_;
  }

 private:
  explicit ContinuedFraction(std::vector<Integer> h);
  void check_invariants() const;

  std::vector<Integer> h_;
  std::vector<Integer> p_;  // p_[i + 1] = p_i
  std::vector<Integer> q_;
};

}  // namespace eqsing
