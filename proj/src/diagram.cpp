#include "eqsing/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "eqsing/contfrac.hpp"
#include "eqsing/error.hpp"

namespace eqsing {

namespace {

// Orientation of the turn a -> b -> c; positive when the chain is strictly
// convex at b.
Integer turn(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

// Input ordered by x ascending and, for equal x, y ascending.
std::vector<LatticePoint> lower_hull(const std::vector<LatticePoint>& sorted) {
  std::vector<LatticePoint> hull;
  for (const auto& p : sorted) {
    if (!hull.empty() && p.y >= hull.back().y) continue;  // dominated
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

void sort_parts(std::vector<Part>& parts) {
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return compare_inclination(a, b) == std::strong_ordering::greater;
  });
}

}  // namespace

std::strong_ordering compare_inclination(const Part& a, const Part& b) {
  Integer lhs = a.m * b.n;
  Integer rhs = b.m * a.n;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NewtonDiagram NewtonDiagram::quadrant(LatticePoint corner) {
  if (corner.x < 0 || corner.y < 0) {
    throw Error(ErrorCode::InvalidDiagram, "quadrant corner must be nonnegative");
  }
  return NewtonDiagram(std::vector<LatticePoint>{std::move(corner)});
}

NewtonDiagram NewtonDiagram::elementary(const Integer& m, const Integer& n) {
  if (m < 0 || n < 0 || (m == 0) != (n == 0)) {
    throw Error(ErrorCode::InvalidDiagram,
                "elementary diagram needs m,n > 0 (or both zero for the quadrant)");
  }
  if (m == 0) return NewtonDiagram();
  return NewtonDiagram(std::vector<LatticePoint>{{0, n}, {m, 0}});
}

NewtonDiagram NewtonDiagram::from_vertices(std::vector<LatticePoint> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::EmptySupport, "diagram without vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (v.x < 0 || v.y < 0) throw Error(ErrorCode::InvalidDiagram, "negative vertex coordinate");
    if (i > 0 && (v.x <= vertices[i - 1].x || v.y >= vertices[i - 1].y)) {
      throw Error(ErrorCode::InvalidDiagram, "vertices must have increasing x and decreasing y");
    }
    if (i >= 2 && turn(vertices[i - 2], vertices[i - 1], v) <= 0) {
      throw Error(ErrorCode::InvalidDiagram, "vertex chain is not strictly convex");
    }
  }
  return NewtonDiagram(std::move(vertices));
}

std::vector<Edge> NewtonDiagram::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back({vertices_[i], vertices_[i + 1]});
  return out;
}

bool NewtonDiagram::is_convenient() const { return top_left().x == 0 && bottom_right().y == 0; }

bool NewtonDiagram::contains(const LatticePoint& p) const {
  if (p.x < top_left().x || p.y < bottom_right().y) return false;
  for (const auto& e : edges()) {
    if (turn(e.left, e.right, p) < 0) return false;
  }
  return true;
}

bool NewtonDiagram::on_polygon(const LatticePoint& p) const {
  if (vertices_.size() == 1) return p == vertices_.front();
  for (const auto& e : edges()) {
    if (turn(e.left, e.right, p) == 0 && p.x >= e.left.x && p.x <= e.right.x) return true;
  }
  return false;
}

NewtonDiagram NewtonDiagram::translated(const LatticePoint& by) const {
  std::vector<LatticePoint> v;
  v.reserve(vertices_.size());
  for (const auto& p : vertices_) v.push_back(p + by);
  return from_vertices(std::move(v));
}

NewtonDiagram from_support(std::span<const LatticePoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySupport, "empty support");
  std::vector<LatticePoint> sorted(points.begin(), points.end());
  for (const auto& p : sorted) {
    if (p.x < 0 || p.y < 0) throw Error(ErrorCode::InvalidDiagram, "support point outside N^2");
  }
  std::sort(sorted.begin(), sorted.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  return NewtonDiagram(lower_hull(sorted));
}

CanonicalRep canonical_rep(const NewtonDiagram& d, bool long_form) {
  CanonicalRep rep;
  rep.offset = {d.top_left().x, d.bottom_right().y};
  rep.is_long = long_form;
  auto edges = d.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    Part v = it->vector();
    if (!long_form) {
      rep.parts.push_back(v);
      continue;
    }
    Integer g = gcd(v.m, v.n);
    Part primitive{v.m / g, v.n / g};
    for (Integer i = 0; i < g; ++i) rep.parts.push_back(primitive);
  }
  return rep;
}

NewtonDiagram CanonicalRep::to_diagram() const {
  std::vector<Part> sorted = parts;
  sort_parts(sorted);
  Integer total_n = 0;
  for (const auto& p : sorted) {
    if (p.m <= 0 || p.n <= 0) throw Error(ErrorCode::InvalidDiagram, "parts must be positive");
    total_n += p.n;
  }
  std::vector<LatticePoint> v{{offset.x, offset.y + total_n}};
  const Part* prev = nullptr;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    LatticePoint next{v.back().x + it->m, v.back().y - it->n};
    if (prev && compare_inclination(*prev, *it) == std::strong_ordering::equal) {
      v.back() = next;
    } else {
      v.push_back(next);
    }
    prev = &*it;
  }
  return NewtonDiagram::from_vertices(std::move(v));
}

CanonicalRep to_long(const CanonicalRep& rep) {
  return canonical_rep(rep.to_diagram(), true);
}

CanonicalRep to_short(const CanonicalRep& rep) {
  return canonical_rep(rep.to_diagram(), false);
}

std::vector<LatticePoint> corner_points(const CanonicalRep& rep) {
  Integer total_m = 0;
  for (const auto& p : rep.parts) total_m += p.m;
  std::vector<LatticePoint> out;
  Integer a = total_m, b = 0;
  out.push_back(rep.offset + LatticePoint{a, b});
  for (const auto& p : rep.parts) {
    a -= p.m;
    b += p.n;
    out.push_back(rep.offset + LatticePoint{a, b});
  }
  return out;
}

NewtonDiagram minkowski_sum(const NewtonDiagram& a, const NewtonDiagram& b) {
  CanonicalRep ra = canonical_rep(a, false);
  CanonicalRep rb = canonical_rep(b, false);
  CanonicalRep sum;
  sum.offset = ra.offset + rb.offset;
  sum.parts = std::move(ra.parts);
  sum.parts.insert(sum.parts.end(), rb.parts.begin(), rb.parts.end());
  return sum.to_diagram();
}

Face initial_part(const NewtonDiagram& d, const Weight& w) {
  if (w.x <= 0 || w.y <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  const auto& v = d.vertices();
  std::vector<Rational> value;
  value.reserve(v.size());
  for (const auto& p : v) value.push_back(w.x * Rational(p.x) + w.y * Rational(p.y));
  auto best = std::min_element(value.begin(), value.end());
  std::size_t i = static_cast<std::size_t>(best - value.begin());
  std::size_t j = i;
  if (j + 1 < v.size() && value[j + 1] == *best) ++j;
  return {v[i], v[j]};
}

namespace {

// Same row scan as trunc() in machine integers; coordinates below 2^30 keep
// every product in range.
std::optional<NewtonDiagram> trunc_small(const NewtonDiagram& d, const Integer& k) {
  constexpr std::int64_t limit = std::int64_t(1) << 30;
  if (d.bottom_right().x >= limit || d.top_left().y >= limit) return std::nullopt;
  const auto& v = d.vertices();
  const auto kk = static_cast<std::int64_t>(k);
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;  // lower hull, x increasing
  auto push = [&](std::int64_t x, std::int64_t y) {
    if (!hull.empty() && hull.back().first == x) hull.pop_back();  // lower row, same column
    while (hull.size() >= 2) {
      auto [ax, ay] = hull[hull.size() - 2];
      auto [bx, by] = hull.back();
      if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) > 0) break;
      hull.pop_back();
    }
    hull.emplace_back(x, y);
  };
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const auto lx = static_cast<std::int64_t>(v[i].x), ly = static_cast<std::int64_t>(v[i].y);
    const auto rx = static_cast<std::int64_t>(v[i + 1].x), ry = static_cast<std::int64_t>(v[i + 1].y);
    if (ly < kk) break;
    const std::int64_t m = rx - lx, n = ly - ry;
    for (std::int64_t j = ly; j >= std::max(kk, ry); --j) {
      std::int64_t num = (ly - j) * m;
      push(lx + num / n + (num % n ? 1 : 0), j);
    }
  }
  if (hull.empty()) hull.emplace_back(static_cast<std::int64_t>(v.front().x), static_cast<std::int64_t>(v.front().y));
  std::vector<LatticePoint> out;
  out.reserve(hull.size());
  for (auto [x, y] : hull) out.push_back({x, y});
  return NewtonDiagram::from_vertices(std::move(out));
}

}  // namespace

NewtonDiagram trunc(const NewtonDiagram& d, const Integer& k) {
  const auto& v = d.vertices();
  std::vector<LatticePoint> pts;
  if (k >= d.top_left().y) {
    pts.push_back({d.top_left().x, k});
    return from_support(pts);
  }
  if (auto fast = trunc_small(d, k)) return *fast;
  // Rows from the top vertex down to max(k, lowest row).
  for (const auto& e : d.edges()) {
    Part vec = e.vector();
    if (e.left.y < k) break;
    // x(j) = left.x + ceil((left.y - j) * M / N); advance with running quotient.
    Integer step_q, step_r;
    boost::multiprecision::divide_qr(vec.m, vec.n, step_q, step_r);
    Integer q = 0, r = 0;  // (drop * M) = q * N + r, 0 <= r < N
    Integer lowest = std::max(k, e.right.y);
    for (Integer j = e.left.y; j >= lowest; --j) {
      pts.push_back({e.left.x + q + (r > 0 ? 1 : 0), j});
      q += step_q;
      r += step_r;
      if (r >= vec.n) {
        r -= vec.n;
        ++q;
      }
    }
  }
  if (pts.empty()) pts.push_back(v.front());
  return from_support(pts);
}

NewtonDiagram symbolic_derivative(const NewtonDiagram& d, const Integer& k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "derivative order must be nonnegative");
  NewtonDiagram t = trunc(d, k);
  return t.translated({0, -k});
}

CanonicalRep elementary_derivative_closed_form(const Integer& m, const Integer& n) {
  if (n < 1 || n >= m) {
    throw Error(ErrorCode::InvalidRange, "closed form needs m > n >= 1");
  }
  if (gcd(m, n) != 1) throw Error(ErrorCode::NotCoprime, "closed form needs gcd(m,n) = 1");
  ContinuedFraction cf = ContinuedFraction::expand(m, n);
  const std::size_t s = cf.length();
  CanonicalRep rep;
  rep.offset = {0, 0};
  rep.is_long = true;
  for (std::size_t i = 1; 2 * i <= s; ++i) {
    const auto odd = static_cast<std::ptrdiff_t>(2 * i - 1);
    for (Integer c = 0; c < cf.h(2 * i); ++c) rep.parts.push_back({cf.p(odd), cf.q(odd)});
  }
  if (s % 2 == 1) {
    const auto last = static_cast<std::ptrdiff_t>(s);
    rep.parts.push_back({cf.p(last) - cf.p(last - 1), cf.q(last) - cf.q(last - 1)});
  }
  return rep;
}

CanonicalRep derivative_by_parts(const CanonicalRep& rep, Integer k) {
  if (rep.offset != LatticePoint{0, 0}) {
    throw Error(ErrorCode::NotConvenient, "derivative_by_parts needs a convenient diagram");
  }
  CanonicalRep out = rep.is_long ? rep : to_long(rep);
  sort_parts(out.parts);
  while (k > 0 && !out.parts.empty()) {
    const Part first = out.parts.front();
    if (first.n == 1) {
      // (M,1)^{(1)} is the quadrant: drop whole copies at once.
      std::size_t copies = 0;
      while (copies < out.parts.size() && out.parts[copies] == first && Integer(copies) < k) ++copies;
      out.parts.erase(out.parts.begin(), out.parts.begin() + static_cast<std::ptrdiff_t>(copies));
      k -= copies;
      continue;
    }
    if (first.m <= first.n) {
      throw Error(ErrorCode::InvalidRange, "derivative_by_parts needs inclinations above 1");
    }
    CanonicalRep d1 = elementary_derivative_closed_form(first.m, first.n);
    out.parts.erase(out.parts.begin());
    out.parts.insert(out.parts.begin(), d1.parts.begin(), d1.parts.end());
    sort_parts(out.parts);
    --k;
  }
  return out;
}

std::pair<NewtonDiagram, NewtonDiagram> split_derivative(const NewtonDiagram& d,
                                                         const Integer& k, std::size_t s) {
  if (!d.is_convenient()) {
    throw Error(ErrorCode::NotConvenient, "split_derivative needs a convenient diagram");
  }
  CanonicalRep rep = canonical_rep(d, true);
  if (s > rep.parts.size()) throw Error(ErrorCode::IndexOutOfRange, "split index exceeds part count");
  CanonicalRep right{{0, 0}, {rep.parts.begin(), rep.parts.begin() + static_cast<std::ptrdiff_t>(s)}, true};
  CanonicalRep left{{0, 0}, {rep.parts.begin() + static_cast<std::ptrdiff_t>(s), rep.parts.end()}, true};
  NewtonDiagram r = right.to_diagram();
  if (k > r.height()) {
    throw Error(ErrorCode::SplitTooDeep,
                "k = " + k.str() + " exceeds the vertical extent " + r.height().str() + " of R");
  }
  return {symbolic_derivative(r, k), left.to_diagram()};
}

}  // namespace eqsing
