#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eqsing/numeric.hpp"

namespace eqsing {

// Characteristic (b0, ..., bh) of an equisingularity class of plane branches.
//
// Construction validates the sequence and precomputes the derived data:
//   e_i = gcd(b_0, ..., b_i),  n_i = e_{i-1} / e_i,  m_i = b_i / e_i,
// and the semigroup generators
//   bbar_l = b_l + sum_{i<l} ((e_{i-1} - e_i) / e_{l-1}) b_i.
// Indices of n, m, bbar and semiroot_degree run over 1..h.
class CharSequence {
 public:
  // Throws Error with NotStrictlyIncreasing, GcdChainViolation,
  // TrailingGcdNotOne or InvalidArgument.
  explicit CharSequence(std::vector<Integer> b);

  // Parses "b0,b1,...,bh".
  static CharSequence parse(std::string_view text);

  std::size_t h() const { return b_.size() - 1; }
  const std::vector<Integer>& b() const { return b_; }
  const std::vector<Integer>& e() const { return e_; }
  const Integer& b(std::size_t i) const;
  const Integer& e(std::size_t i) const;
  const Integer& multiplicity() const { return b_.front(); }

  const Integer& n(std::size_t i) const;
  const Integer& m(std::size_t i) const;
  const Integer& bbar(std::size_t l) const;

  // Degree b0 / e_{l-1} = n_1 ... n_{l-1} of the l-th semiroot.
  Integer semiroot_degree(std::size_t l) const;

  // Characteristic exponent b_i / b_0.
  Rational exponent(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const CharSequence&, const CharSequence&) = default;

 private:
  void check_level(std::size_t l) const;

  std::vector<Integer> b_;
  std::vector<Integer> e_;
  std::vector<Integer> n_;     // n_[0] unused
  std::vector<Integer> m_;     // m_[0] unused
  std::vector<Integer> bbar_;  // bbar_[0] unused
};

}  // namespace eqsing
