#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "eqsing/numeric.hpp"

namespace eqsing {

struct LatticePoint {
  Integer x;
  Integer y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
};

// Elementary diagram {(m,0),(0,n)} + R^2_{>=0}; also used for an edge
// vector (horizontal run m, vertical drop n). Inclination is m/n.
struct Part {
  Integer m;
  Integer n;

  friend bool operator==(const Part&, const Part&) = default;
};

// Three-way comparison of inclinations m/n (n > 0).
std::strong_ordering compare_inclination(const Part& a, const Part& b);

// Compact boundary segment, `left` has the smaller x.
struct Edge {
  LatticePoint left;
  LatticePoint right;

  Part vector() const { return {right.x - left.x, left.y - right.y}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Minimizing face of a weighted initial part: a vertex when left == right.
struct Face {
  LatticePoint left;
  LatticePoint right;

  bool is_vertex() const { return left == right; }
  friend bool operator==(const Face&, const Face&) = default;
  friend Face operator+(const Face& a, const Face& b) {
    return {a.left + b.left, a.right + b.right};
  }
};

// Positive weight vector omega.
struct Weight {
  Rational x;
  Rational y;
};

// Newton diagram: convex hull of its vertices + (R_{>=0})^2, stored as the
// vertex chain ordered by increasing x (and strictly decreasing y). Edge
// inclinations increase from the top-left vertex towards the x-axis. A
// single vertex is a translated quadrant.
class NewtonDiagram {
 public:
  // The first quadrant.
  NewtonDiagram() : vertices_{{0, 0}} {}

  static NewtonDiagram quadrant(LatticePoint corner);
  static NewtonDiagram elementary(const Integer& m, const Integer& n);
  // Validates a strictly convex chain; throws Error(InvalidDiagram).
  static NewtonDiagram from_vertices(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::vector<Edge> edges() const;
  const LatticePoint& top_left() const { return vertices_.front(); }
  const LatticePoint& bottom_right() const { return vertices_.back(); }

  // Meets both coordinate axes.
  bool is_convenient() const;
  // Vertical extent of the Newton polygon.
  Integer height() const { return top_left().y - bottom_right().y; }
  Integer width() const { return bottom_right().x - top_left().x; }

  bool contains(const LatticePoint& p) const;
  // On a compact edge, or equal to the only vertex.
  bool on_polygon(const LatticePoint& p) const;
  NewtonDiagram translated(const LatticePoint& by) const;

  friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;

 private:
  explicit NewtonDiagram(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  friend NewtonDiagram from_support(std::span<const LatticePoint> points);

  std::vector<LatticePoint> vertices_;
};

// Canonical (short) or long canonical representation
// offset + sum of parts, parts ordered by weakly decreasing inclination, so
// parts.front() is the edge touching the horizontal side.
struct CanonicalRep {
  LatticePoint offset;
  std::vector<Part> parts;
  bool is_long = false;

  NewtonDiagram to_diagram() const;
  friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
};

NewtonDiagram from_support(std::span<const LatticePoint> points);
NewtonDiagram minkowski_sum(const NewtonDiagram& a, const NewtonDiagram& b);
Face initial_part(const NewtonDiagram& d, const Weight& w);

CanonicalRep canonical_rep(const NewtonDiagram& d, bool long_form);
CanonicalRep to_long(const CanonicalRep& rep);
CanonicalRep to_short(const CanonicalRep& rep);

// A_j = offset + (sum_{i>j} M_i, sum_{i<=j} N_i), j = 0..r.
std::vector<LatticePoint> corner_points(const CanonicalRep& rep);

// Newton diagram of the lattice points of d with second coordinate >= k.
NewtonDiagram trunc(const NewtonDiagram& d, const Integer& k);

// Newton diagram of (d - (0,k)) intersected with N^2, computed from the
// leftmost lattice point of every row of the truncated strip.
NewtonDiagram symbolic_derivative(const NewtonDiagram& d, const Integer& k);

// First symbolic derivative of the elementary diagram (m,n), gcd(m,n) = 1,
// m > n >= 1, from the continued fraction of m/n. Long form.
CanonicalRep elementary_derivative_closed_form(const Integer& m, const Integer& n);

// k-th symbolic derivative of a convenient diagram whose long parts all have
// inclination > 1, by repeatedly differentiating only the steepest part.
// Works for coordinates far beyond what row enumeration can visit.
CanonicalRep derivative_by_parts(const CanonicalRep& rep, Integer k);

// Splits a convenient diagram after its first `s` long parts into R
// (steep side) and L and returns (R^{(k)}, L); their Minkowski sum is d^{(k)}.
// Throws SplitTooDeep when k exceeds the vertical extent of R.
std::pair<NewtonDiagram, NewtonDiagram> split_derivative(const NewtonDiagram& d,
                                                         const Integer& k, std::size_t s);

}  // namespace eqsing
