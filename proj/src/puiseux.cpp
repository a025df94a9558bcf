#include "eqsing/puiseux.hpp"

#include <numeric>
#include <vector>

#include "eqsing/error.hpp"
#include "eqsing/polynomial.hpp"

namespace eqsing {

namespace {

std::int64_t ceil_div64(std::int64_t a, std::int64_t d) {
  return a >= 0 ? (a + d - 1) / d : -((-a) / d);
}

// Splits "a+b-c" at top-level signs that start a new term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool sign = (c == '+' || c == '-');
    bool starts_term = sign && depth == 0 && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' &&
                       s[i - 1] != '/';
    if (starts_term) {
      out.push_back(cur);
      cur.clear();
      if (c == '+') continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

Rational parse_exponent(std::string e) {
  if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
  return parse_rational(e);
}

}  // namespace

std::string Order::to_string() const {
  switch (kind) {
    case Kind::Finite: return eqsing::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::AtLeast: return ">=" + eqsing::to_string(value);
  }
  return "?";
}

PuiseuxSeries::PuiseuxSeries(std::int64_t denom, Terms terms, std::optional<std::int64_t> trunc_bound)
    : denom_(denom), trunc_(trunc_bound) {
  if (denom <= 0) throw Error(ErrorCode::InvalidArgument, "denominator must be positive");
  for (auto& [i, c] : terms) {
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (trunc_ && i >= *trunc_) {
      throw Error(ErrorCode::InvalidArgument, "term beyond the truncation bound");
    }
    if (c != 0) terms_.emplace(i, std::move(c));
  }
}

PuiseuxSeries PuiseuxSeries::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty series");
  std::vector<std::pair<Rational, Coeff>> parsed;
  Integer denom = 1;
  for (const auto& raw : split_terms(s)) {
    if (raw.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + s + "'");
    std::string term = raw;
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term = term.substr(1);
    }
    Coeff c = 1;
    Rational e = 0;
    auto xpos = term.find('x');
    if (xpos == std::string::npos) {
      c = parse_coeff(term);
    } else {
      std::string cs = term.substr(0, xpos);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) c = parse_coeff(cs);
      std::string rest = term.substr(xpos + 1);
      if (rest.empty()) {
        e = 1;
      } else if (rest[0] == '^') {
        e = parse_exponent(rest.substr(1));
      } else {
        throw Error(ErrorCode::ParseError, "unexpected '" + rest + "' after x");
      }
    }
    if (e < 0) throw Error(ErrorCode::ParseError, "negative exponent in '" + raw + "'");
    if (negative) c = -c;
    denom = lcm(denom, denominator_of(e));
    parsed.emplace_back(e, c);
  }
  const std::int64_t n = to_int64(denom);
  Terms terms;
  for (auto& [e, c] : parsed) {
    std::int64_t i = to_int64(numerator_of(e) * (denom / denominator_of(e)));
    terms[i] += c;
  }
  return PuiseuxSeries(n, std::move(terms));
}

Coeff PuiseuxSeries::coeff(std::int64_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Coeff(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::with_denom(std::int64_t n) const {
  if (n <= 0 || n % denom_ != 0) {
    throw Error(ErrorCode::InvalidArgument, "new denominator must be a multiple of the old one");
  }
  const std::int64_t f = n / denom_;
  Terms t;
  for (const auto& [i, c] : terms_) t.emplace(i * f, c);
  std::optional<std::int64_t> tb;
  if (trunc_) tb = *trunc_ * f;
  return PuiseuxSeries(n, std::move(t), tb);
}

PuiseuxSeries PuiseuxSeries::with_denom_divisor(std::int64_t d) const {
  const std::int64_t f = denom_ / d;
  Terms t;
  for (const auto& [i, c] : terms_) t.emplace(i / f, c);
  std::optional<std::int64_t> tb;
  if (trunc_) tb = ceil_div64(*trunc_, f);
  return PuiseuxSeries(d, std::move(t), tb);
}

std::int64_t PuiseuxSeries::index() const {
  std::int64_t g = denom_;
  for (const auto& [i, c] : terms_) g = std::gcd(g, i);
  return denom_ / g;
}

Order PuiseuxSeries::ord() const {
  if (!terms_.empty()) return Order::finite(Rational(terms_.begin()->first, denom_));
  if (trunc_) return Order::at_least(Rational(*trunc_, denom_));
  return Order::infinite();
}

PuiseuxSeries PuiseuxSeries::truncate_below(const std::optional<Rational>& cutoff) const {
  if (!cutoff) return *this;
  Terms t;
  for (const auto& [i, c] : terms_) {
    if (Rational(i, denom_) < *cutoff) t.emplace(i, c);
  }
  // Known exactly: everything below the cutoff is known if it is below the bound.
  std::optional<std::int64_t> tb = trunc_;
  if (trunc_ && Rational(*trunc_, denom_) >= *cutoff) tb.reset();
  return PuiseuxSeries(denom_, std::move(t), tb);
}

CharSequence PuiseuxSeries::characteristic() const {
  if (index() != denom_ && trunc_) {
    throw Error(ErrorCode::TruncationTooShort,
                "gcd chain has not reached 1 below the truncation bound");
  }
  if (index() != denom_) {
    throw Error(ErrorCode::IndexMismatch, "series lives in denominator " +
                                              std::to_string(index()) + ", not " +
                                              std::to_string(denom_) + "; reduce first");
  }
  if (!terms_.empty() && terms_.begin()->first < denom_) {
    throw Error(ErrorCode::InvalidArgument, "branch roots must have order >= 1");
  }
  std::vector<Integer> b{denom_};
  std::int64_t e = denom_;
  for (const auto& [i, c] : terms_) {
    if (e == 1) break;
    std::int64_t g = std::gcd(e, i);
    if (g < e) {
      b.push_back(i);
      e = g;
    }
  }
  if (e != 1) {
    throw Error(ErrorCode::TruncationTooShort, "gcd chain stalls at " + std::to_string(e) +
                                                   " before the truncation bound");
  }
  return CharSequence(std::move(b));
}

std::int64_t PuiseuxSeries::distinct_conjugates() const { return index(); }

std::string PuiseuxSeries::to_string() const {
  if (terms_.empty()) return trunc_ ? "O(x^(" + eqsing::to_string(Rational(*trunc_, denom_)) + "))" : "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    Rational e(i, denom_);
    Coeff a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool one = (a == 1);
    if (!one) out += eqsing::to_string(a);
    if (e == 0) {
      if (one) out += "1";
      continue;
    }
    if (!one) out += "*";
    out += "x";
    if (e != 1) {
      out += "^";
      out += denominator_of(e) == 1 ? eqsing::to_string(e) : "(" + eqsing::to_string(e) + ")";
    }
  }
  if (trunc_) out += " + O(x^(" + eqsing::to_string(Rational(*trunc_, denom_)) + "))";
  return out;
}

Order contact(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const std::int64_t n = std::lcm(a.denom(), b.denom());
  PuiseuxSeries A = a.with_denom(n), B = b.with_denom(n);
  std::optional<std::int64_t> bound;
  if (A.trunc_bound()) bound = *A.trunc_bound();
  if (B.trunc_bound()) bound = bound ? std::min(*bound, *B.trunc_bound()) : *B.trunc_bound();
  std::map<std::int64_t, Coeff> diff = A.terms();
  for (const auto& [i, c] : B.terms()) diff[i] -= c;
  for (const auto& [i, c] : diff) {
    if (bound && i >= *bound) break;
    if (c != 0) return Order::finite(Rational(i, n));
  }
  if (bound) return Order::at_least(Rational(*bound, n));
  return Order::infinite();
}

std::int64_t Conjugate::phase(std::int64_t i) const {
  std::int64_t p = (r % n) * (i % n) % n;
  return p < 0 ? p + n : p;
}

std::optional<int> Conjugate::rational_unit(std::int64_t i) const {
  std::int64_t p = phase(i);
  if (p == 0) return 1;
  if (2 * p == n) return -1;
  return std::nullopt;
}

Conjugate conjugate(const PuiseuxSeries& a, std::int64_t eps_index) {
  std::int64_t r = eps_index % a.denom();
  if (r < 0) r += a.denom();
  return {a.denom(), r};
}

// Power sums p_j = sum_eps alpha_eps^j = n * (terms of A(t)^j with t-exponent
// divisible by n, t^n -> x), then Newton's identities for the elementary
// symmetric functions. Only rational arithmetic is involved.
BivariatePoly min_poly(const PuiseuxSeries& a, std::int64_t x_trunc) {
  const PuiseuxSeries r = a.reduce();
  const std::int64_t n = r.denom();
  std::int64_t X = x_trunc;
  if (r.trunc_bound()) X = std::min(X, ceil_div64(*r.trunc_bound(), n));
  const std::int64_t v = r.is_zero() ? 0 : r.terms().begin()->first;
  if (X <= v) {
    throw Error(ErrorCode::TruncationTooShort,
                "x-bound " + std::to_string(X) + " does not exceed the order " + std::to_string(v) +
                    " of the constant term");
  }
  const std::int64_t tmax = n * X;  // t-exponents < tmax matter
  const std::size_t len = static_cast<std::size_t>(X);

  std::vector<std::pair<std::int64_t, Coeff>> A(r.terms().begin(), r.terms().end());
  std::vector<std::vector<Coeff>> p(static_cast<std::size_t>(n) + 1);
  std::vector<Coeff> power(static_cast<std::size_t>(tmax), Coeff(0));
  power[0] = 1;
  for (std::int64_t j = 1; j <= n; ++j) {
    std::vector<Coeff> next(static_cast<std::size_t>(tmax), Coeff(0));
    for (std::int64_t e = 0; e < tmax; ++e) {
      const Coeff& c = power[static_cast<std::size_t>(e)];
      if (c == 0) continue;
      for (const auto& [i, ai] : A) {
        if (e + i >= tmax) break;
        next[static_cast<std::size_t>(e + i)] += c * ai;
      }
    }
    power.swap(next);
    auto& pj = p[static_cast<std::size_t>(j)];
    pj.assign(len, Coeff(0));
    for (std::int64_t e = 0; e < X; ++e) pj[static_cast<std::size_t>(e)] = n * power[static_cast<std::size_t>(e * n)];
  }

  std::vector<std::vector<Coeff>> el(static_cast<std::size_t>(n) + 1, std::vector<Coeff>(len, Coeff(0)));
  el[0][0] = 1;
  for (std::int64_t j = 1; j <= n; ++j) {
    auto& ej = el[static_cast<std::size_t>(j)];
    for (std::int64_t i = 1; i <= j; ++i) {
      const auto& prev = el[static_cast<std::size_t>(j - i)];
      const auto& pi = p[static_cast<std::size_t>(i)];
      const bool plus = (i % 2 == 1);
      for (std::size_t u = 0; u < len; ++u) {
        if (prev[u] == 0) continue;
        for (std::size_t w = 0; u + w < len; ++w) {
          if (pi[w] == 0) continue;
          if (plus) {
            ej[u + w] += prev[u] * pi[w];
          } else {
            ej[u + w] -= prev[u] * pi[w];
          }
        }
      }
    }
    for (auto& c : ej) c /= j;
  }

  // deg_x e_j <= j * max / n <= max, so a finite series past its top term is exact.
  std::optional<std::int64_t> bound = X;
  if (!r.trunc_bound() && (r.is_zero() || X > r.terms().rbegin()->first)) bound.reset();
  BivariatePoly f(bound);
  for (std::int64_t j = 0; j <= n; ++j) {
    const bool neg = (j % 2 == 1);
    const auto& ej = el[static_cast<std::size_t>(j)];
    for (std::int64_t e = 0; e < X; ++e) {
      const Coeff& c = ej[static_cast<std::size_t>(e)];
      if (c != 0) f.add(e, n - j, neg ? Coeff(-c) : c);
    }
  }
  return f;
}

}  // namespace eqsing
