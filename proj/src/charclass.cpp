#include "eqsing/charclass.hpp"

#include "eqsing/error.hpp"

namespace eqsing {

CharSequence::CharSequence(std::vector<Integer> b) : b_(std::move(b)) {
  if (b_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a characteristic needs b0 and at least one b_i");
  }
  if (b_.front() <= 1) {
    throw Error(ErrorCode::InvalidArgument, "b0 must exceed 1 (singular branch)");
  }
  for (std::size_t i = 1; i < b_.size(); ++i) {
    if (b_[i] <= b_[i - 1]) {
      throw Error(ErrorCode::NotStrictlyIncreasing,
                  "b_" + std::to_string(i) + " = " + b_[i].str() + " does not exceed b_" +
                      std::to_string(i - 1) + " = " + b_[i - 1].str());
    }
  }

  e_.push_back(b_.front());
  for (std::size_t i = 1; i < b_.size(); ++i) {
    Integer g = gcd(e_.back(), b_[i]);
    if (g == e_.back()) {
      throw Error(ErrorCode::GcdChainViolation,
                  "gcd(e_" + std::to_string(i - 1) + ", b_" + std::to_string(i) +
                      ") = " + g.str() + " does not drop");
    }
    e_.push_back(g);
  }
  if (e_.back() != 1) {
    throw Error(ErrorCode::TrailingGcdNotOne, "e_h = " + e_.back().str() + ", expected 1");
  }

  n_.resize(b_.size());
  m_.resize(b_.size());
  bbar_.resize(b_.size());
  for (std::size_t i = 1; i < b_.size(); ++i) {
    n_[i] = e_[i - 1] / e_[i];
    m_[i] = b_[i] / e_[i];
  }
  for (std::size_t l = 1; l < b_.size(); ++l) {
    Integer acc = b_[l];
    for (std::size_t i = 1; i < l; ++i) {
      Integer term = (e_[i - 1] - e_[i]) * b_[i];
      if (term % e_[l - 1] != 0) {
        throw std::logic_error("bbar summand not integral");
      }
      acc += term / e_[l - 1];
    }
    bbar_[l] = acc;
  }
}

CharSequence CharSequence::parse(std::string_view text) {
  std::vector<Integer> b;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    b.push_back(parse_integer(text.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CharSequence(std::move(b));
}

void CharSequence::check_level(std::size_t l) const {
  if (l < 1 || l > h()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(l) + " outside 1.." + std::to_string(h()));
  }
}

const Integer& CharSequence::b(std::size_t i) const {
  if (i > h()) throw Error(ErrorCode::IndexOutOfRange, "b index out of range");
  return b_[i];
}

const Integer& CharSequence::e(std::size_t i) const {
  if (i > h()) throw Error(ErrorCode::IndexOutOfRange, "e index out of range");
  return e_[i];
}

const Integer& CharSequence::n(std::size_t i) const {
  check_level(i);
  return n_[i];
}

const Integer& CharSequence::m(std::size_t i) const {
  check_level(i);
  return m_[i];
}

const Integer& CharSequence::bbar(std::size_t l) const {
  check_level(l);
  return bbar_[l];
}

Integer CharSequence::semiroot_degree(std::size_t l) const {
  check_level(l);
  return b_.front() / e_[l - 1];
}

Rational CharSequence::exponent(std::size_t i) const {
  return Rational(b(i), b_.front());
}

std::string CharSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (i) out += ',';
    out += b_[i].str();
  }
  return out;
}

}  // namespace eqsing
