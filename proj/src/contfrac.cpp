#include "eqsing/contfrac.hpp"

#include <stdexcept>

#include "eqsing/error.hpp"

namespace eqsing {

ContinuedFraction::ContinuedFraction(std::vector<Integer> h) : h_(std::move(h)) {
  p_.reserve(h_.size() + 1);
  q_.reserve(h_.size() + 1);
  p_.push_back(1);
  q_.push_back(0);
  p_.push_back(h_[0]);
  q_.push_back(1);
  for (std::size_t i = 1; i < h_.size(); ++i) {
    p_.push_back(h_[i] * p_[i] + p_[i - 1]);
    q_.push_back(h_[i] * q_[i] + q_[i - 1]);
  }
  check_invariants();
}

ContinuedFraction ContinuedFraction::expand(const Integer& m, const Integer& n) {
  if (n <= 0 || n >= m) {
    throw Error(ErrorCode::InvalidRange,
                "continued fraction needs 0 < n < m, got m=" + m.str() + ", n=" + n.str());
  }
  std::vector<Integer> h;
  Integer a = m, b = n;
  while (b != 0) {
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    h.push_back(q);
    a = b;
    b = r;
  }
  return ContinuedFraction(std::move(h));
}

ContinuedFraction ContinuedFraction::from_quotients(std::vector<Integer> h) {
  if (h.empty()) throw Error(ErrorCode::InvalidArgument, "empty quotient sequence");
  for (const auto& v : h) {
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "partial quotients must be positive");
  }
  return ContinuedFraction(std::move(h));
}

ContinuedFraction ContinuedFraction::to_even_length() const {
  if (length() % 2 == 0) return *this;
  std::vector<Integer> h = h_;
  if (h.back() > 1) {
    h.back() -= 1;
    h.push_back(1);
  } else {
    // [.., h_{s-1}, 1] == [.., h_{s-1} + 1]
    h.pop_back();
    h.back() += 1;
  }
  return ContinuedFraction(std::move(h));
}

void ContinuedFraction::check_invariants() const {
  const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(length());
  for (std::ptrdiff_t i = 0; i <= s; ++i) {
    Integer det = p(i) * q(i - 1) - p(i - 1) * q(i);
    Integer expected = (i % 2 == 0) ? Integer(-1) : Integer(1);  // (-1)^{i+1}
    if (det != expected) throw std::logic_error("convergent determinant identity violated");
    if (gcd(p(i), q(i)) != 1) throw std::logic_error("convergent not in lowest terms");
  }
  const Rational v = value();
  for (std::ptrdiff_t i = 0; i + 2 <= s; ++i) {
    Rational a(p(i), q(i)), b(p(i + 2), q(i + 2));
    bool ok = (i % 2 == 0) ? (a < b) : (a > b);
    if (!ok) throw std::logic_error("convergents do not interleave");
  }
  for (std::ptrdiff_t i = 0; i <= s; ++i) {
    Rational c(p(i), q(i));
    bool ok = (i % 2 == 0) ? (c <= v) : (c >= v);
    if (!ok) throw std::logic_error("convergent on the wrong side of the value");
  }
}

}  // namespace eqsing
