#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the diagram module beyond reading vertex chains, so agreement is a real
// cross-check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "eqsing/charclass.hpp"
#include "eqsing/diagram.hpp"
#include "eqsing/polynomial.hpp"

namespace testing_support {

using P = std::pair<std::int64_t, std::int64_t>;

inline std::int64_t cross(P o, P a, P b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Vertices of conv(S) + R^2_{>=0}, brute force: a point survives unless it
// is dominated or lies on/above a segment between two other points that
// straddle it.
inline std::vector<P> brute_hull(std::vector<P> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<P> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    P p = s[i];
    bool keep = true;
    for (std::size_t a = 0; a < s.size() && keep; ++a) {
      if (a == i) continue;
      if (s[a].first <= p.first && s[a].second <= p.second) keep = false;
    }
    for (std::size_t a = 0; a < s.size() && keep; ++a) {
      for (std::size_t b = 0; b < s.size() && keep; ++b) {
        if (a == i || b == i) continue;
        if (s[a].first < p.first && p.first < s[b].first && cross(s[a], s[b], p) >= 0) keep = false;
      }
    }
    if (keep) out.push_back(p);
  }
  return out;
}

inline std::vector<P> chain(const eqsing::NewtonDiagram& d) {
  std::vector<P> v;
  for (const auto& p : d.vertices()) {
    v.emplace_back(static_cast<std::int64_t>(p.x), static_cast<std::int64_t>(p.y));
  }
  return v;
}

// Membership through the half planes of the polygon edges plus the quadrant.
inline bool inside(const std::vector<P>& v, P q) {
  if (q.second < v.back().second || q.first < v.front().first) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (cross(v[i], v[i + 1], q) < 0) return false;
  }
  return true;
}

// Newton diagram of (D - (0,k)) cap N^2 from the definition: scan every row.
inline std::vector<P> lattice_derivative(const std::vector<P>& v, std::int64_t k) {
  std::int64_t top = std::max(v.front().second, k);
  std::int64_t right = v.back().first;
  std::vector<P> pts;
  for (std::int64_t j = std::max<std::int64_t>(k, v.back().second); j <= top; ++j) {
    for (std::int64_t i = 0; i <= right; ++i) {
      if (inside(v, {i, j})) {
        pts.emplace_back(i, j - k);
        break;
      }
    }
  }
  return brute_hull(pts);
}

inline std::vector<P> elementary_oracle(std::int64_t m, std::int64_t n, std::int64_t k) {
  return lattice_derivative({{0, n}, {m, 0}}, k);
}

// Random valid characteristic with b0 <= max_b0.
template <class Rng>
eqsing::CharSequence random_char(Rng& rng, std::int64_t max_b0) {
  for (;;) {
    std::int64_t b0 = std::uniform_int_distribution<std::int64_t>(2, max_b0)(rng);
    std::vector<eqsing::Integer> b{b0};
    std::int64_t e = b0;
    std::int64_t last = b0;
    while (e > 1) {
      std::vector<std::int64_t> divs;
      for (std::int64_t d = 1; d < e; ++d) {
        if (e % d == 0) divs.push_back(d);
      }
      std::int64_t d = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
      std::int64_t next = last + 1 + std::uniform_int_distribution<std::int64_t>(0, 2 * b0)(rng);
      while (std::gcd(e, next) != d) ++next;
      b.push_back(next);
      last = next;
      e = d;
    }
    return eqsing::CharSequence(b);
  }
}

inline eqsing::BivariatePoly poly(std::initializer_list<std::tuple<int, int, long>> terms) {
  eqsing::BivariatePoly f;
  for (auto [i, j, c] : terms) f.add(i, j, eqsing::Coeff(c));
  return f;
}

}  // namespace testing_support
