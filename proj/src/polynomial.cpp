#include "eqsing/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "eqsing/error.hpp"
#include "eqsing/puiseux.hpp"

namespace eqsing {

namespace {

std::optional<std::int64_t> min_bound(const std::optional<std::int64_t>& a,
                                      const std::optional<std::int64_t>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::int64_t x_order(const BivariatePoly& f) {
  std::int64_t o = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : f.rows()) {
    if (!row.empty()) o = std::min(o, row.begin()->first);
  }
  return o;
}

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  a = uni_trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    Coeff q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a = uni_trim(std::move(a));
  }
  return a;
}

}  // namespace

void BivariatePoly::add(std::int64_t i, std::int64_t j, const Coeff& c) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (c == 0) return;
  if (x_bound_ && i >= *x_bound_) return;
  if (static_cast<std::size_t>(j) >= rows_.size()) rows_.resize(static_cast<std::size_t>(j) + 1);
  auto& row = rows_[static_cast<std::size_t>(j)];
  auto [it, inserted] = row.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) row.erase(it);
  }
  trim();
}

void BivariatePoly::trim() {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Coeff BivariatePoly::coeff(std::int64_t i, std::int64_t j) const {
  if (j < 0 || j > degree_y()) return 0;
  const auto& row = rows_[static_cast<std::size_t>(j)];
  auto it = row.find(i);
  return it == row.end() ? Coeff(0) : it->second;
}

std::size_t BivariatePoly::term_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::vector<LatticePoint> BivariatePoly::support() const {
  std::vector<LatticePoint> pts;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    for (const auto& [i, c] : rows_[j]) pts.push_back({i, static_cast<std::int64_t>(j)});
  }
  return pts;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  std::optional<std::int64_t> bound;
  if (!a.is_zero() && !b.is_zero()) {
    if (a.x_bound()) bound = *a.x_bound() + x_order(b);
    if (b.x_bound()) bound = min_bound(bound, *b.x_bound() + x_order(a));
  } else {
    bound = min_bound(a.x_bound(), b.x_bound());
  }
  BivariatePoly out(bound);
  for (std::size_t ja = 0; ja < a.rows().size(); ++ja) {
    for (const auto& [ia, ca] : a.rows()[ja]) {
      for (std::size_t jb = 0; jb < b.rows().size(); ++jb) {
        for (const auto& [ib, cb] : b.rows()[jb]) {
          out.add(ia + ib, static_cast<std::int64_t>(ja + jb), ca * cb);
        }
      }
    }
  }
  return out;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out(min_bound(a.x_bound(), b.x_bound()));
  for (std::size_t j = 0; j < a.rows().size(); ++j) {
    for (const auto& [i, c] : a.rows()[j]) out.add(i, static_cast<std::int64_t>(j), c);
  }
  for (std::size_t j = 0; j < b.rows().size(); ++j) {
    for (const auto& [i, c] : b.rows()[j]) out.add(i, static_cast<std::int64_t>(j), -c);
  }
  return out;
}

std::string BivariatePoly::to_string() const {
  std::string out;
  for (std::int64_t j = degree_y(); j >= 0; --j) {
    for (const auto& [i, c0] : rows_[static_cast<std::size_t>(j)]) {
      Coeff c = c0;
      if (out.empty()) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      std::string mono;
      if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "y" : "y^" + std::to_string(j);
      }
      if (mono.empty()) {
        out += eqsing::to_string(c);
      } else if (c == 1) {
        out += mono;
      } else {
        out += eqsing::to_string(c) + "*" + mono;
      }
    }
  }
  if (out.empty()) out = "0";
  if (x_bound_) out += " + O(x^" + std::to_string(*x_bound_) + ")";
  return out;
}

BivariatePoly derivative_y(const BivariatePoly& f, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  if (k > f.degree_y()) {
    throw Error(ErrorCode::OrderExceedsDegree, "derivative order " + std::to_string(k) +
                                                   " exceeds deg_y = " + std::to_string(f.degree_y()));
  }
  BivariatePoly out(f.x_bound());
  for (std::int64_t j = k; j <= f.degree_y(); ++j) {
    // j (j-1) ... (j-k+1)
    Coeff falling = 1;
    for (std::int64_t u = 0; u < k; ++u) falling *= (j - u);
    for (const auto& [i, c] : f.rows()[static_cast<std::size_t>(j)]) out.add(i, j - k, c * falling);
  }
  return out;
}

BivariatePoly hat_transform(const BivariatePoly& f, std::int64_t n_sub, const PuiseuxSeries& lambda) {
  if (n_sub <= 0) throw Error(ErrorCode::InvalidArgument, "substitution exponent must be positive");
  std::vector<std::pair<std::int64_t, Coeff>> L;
  for (const auto& [i, c] : lambda.terms()) {
    if ((i * n_sub) % lambda.denom() != 0) {
      throw Error(ErrorCode::NonIntegralSubstitution,
                  "lambda(x^" + std::to_string(n_sub) + ") has the exponent " +
                      eqsing::to_string(Rational(i * n_sub, lambda.denom())));
    }
    L.emplace_back(i * n_sub / lambda.denom(), c);
  }
  std::optional<std::int64_t> bound;
  if (f.x_bound()) bound = *f.x_bound() * n_sub;
  if (lambda.trunc_bound()) {
    const std::int64_t tb = (*lambda.trunc_bound() * n_sub + lambda.denom() - 1) / lambda.denom();
    bound = min_bound(bound, tb);
  }
  if (f.is_zero()) return BivariatePoly(bound);

  // Horner in y with rows kept as dense-free maps in x.
  using Row = BivariatePoly::Row;
  auto scaled = [&](const Row& row) {
    Row out;
    for (const auto& [i, c] : row) {
      if (!bound || i * n_sub < *bound) out.emplace(i * n_sub, c);
    }
    return out;
  };
  std::vector<Row> acc{scaled(f.rows().back())};
  for (std::int64_t j = f.degree_y() - 1; j >= 0; --j) {
    std::vector<Row> next(acc.size() + 1);
    for (std::size_t u = 0; u < acc.size(); ++u) {
      for (const auto& [i, c] : acc[u]) {
        next[u + 1][i] += c;
        for (const auto& [li, lc] : L) {
          if (bound && i + li >= *bound) break;
          next[u][i + li] += c * lc;
        }
      }
    }
    for (const auto& [i, c] : scaled(f.rows()[static_cast<std::size_t>(j)])) next[0][i] += c;
    for (auto& row : next) std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    acc.swap(next);
  }
  BivariatePoly out(bound);
  for (std::size_t u = 0; u < acc.size(); ++u) {
    for (const auto& [i, c] : acc[u]) out.add(i, static_cast<std::int64_t>(u), c);
  }
  return out;
}

ObservedDiagram diagram_of(const BivariatePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no Newton diagram");
  auto pts = f.support();
  ObservedDiagram od{from_support(pts), true, {}};
  const auto edges = od.diagram.edges();
  od.edge_certified.assign(edges.size(), true);
  if (!f.x_bound()) return od;
  const Integer X = *f.x_bound();
  const auto& br = od.diagram.bottom_right();
  od.certified = (br.y == 0 && br.x <= X);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Part v = edges[e].vector();
    Integer g = gcd(v.m, v.n);
    Integer a = v.m / g, b = v.n / g;
    Integer c = b * edges[e].left.x + a * edges[e].left.y;
    od.edge_certified[e] = od.certified || b * X > c;
  }
  return od;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Coeff lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

bool uni_squarefree(const UniPoly& p0) {
  UniPoly p = uni_trim(p0);
  if (p.size() <= 2) return true;
  UniPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return uni_gcd(p, d).size() == 1;
}

bool edge_poly_squarefree(const BivariatePoly& f, const Edge& edge) {
  auto od = diagram_of(f);
  auto edges = od.diagram.edges();
  if (std::find(edges.begin(), edges.end(), edge) == edges.end()) {
    throw Error(ErrorCode::EdgeNotOnPolygon, "edge is not a compact edge of the Newton polygon");
  }
  Part v = edge.vector();
  Integer g = gcd(v.m, v.n);
  Integer a = v.m / g, b = v.n / g;
  const std::int64_t base = to_int64(edge.right.y);
  UniPoly p(static_cast<std::size_t>(to_int64(edge.left.y) - base) + 1, Coeff(0));
  for (Integer t = 0; t <= g; ++t) {
    const std::int64_t i = to_int64(edge.left.x + t * a);
    const std::int64_t j = to_int64(edge.left.y - t * b);
    p[static_cast<std::size_t>(j - base)] = f.coeff(i, j);
  }
  return uni_squarefree(p);
}

std::optional<BivariatePoly> weighted_initial_form(const BivariatePoly& f, const Integer& w_x,
                                                   const Integer& w_y) {
  if (w_x <= 0 || w_y <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no initial form");
  std::optional<Integer> best;
  for (const auto& p : f.support()) {
    Integer w = w_x * p.x + w_y * p.y;
    if (!best || w < *best) best = w;
  }
  if (f.x_bound() && w_x * *f.x_bound() <= *best) return std::nullopt;
  BivariatePoly out;
  for (const auto& p : f.support()) {
    if (w_x * p.x + w_y * p.y == *best) {
      const auto i = to_int64(p.x), j = to_int64(p.y);
      out.add(i, j, f.coeff(i, j));
    }
  }
  return out;
}

}  // namespace eqsing
