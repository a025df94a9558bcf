#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqsing/diagram.hpp"
#include "eqsing/numeric.hpp"

namespace eqsing {

class PuiseuxSeries;

// Dense-in-y, sparse-in-x polynomial sum c_{ij} x^i y^j. When x_bound is
// set, terms with i >= x_bound are unknown and never stored.
class BivariatePoly {
 public:
  using Row = std::map<std::int64_t, Coeff>;

  BivariatePoly() = default;
  explicit BivariatePoly(std::optional<std::int64_t> x_bound) : x_bound_(x_bound) {}

  // Adds c x^i y^j; silently drops terms past the bound.
  void add(std::int64_t i, std::int64_t j, const Coeff& c);
  Coeff coeff(std::int64_t i, std::int64_t j) const;

  const std::vector<Row>& rows() const { return rows_; }
  const std::optional<std::int64_t>& x_bound() const { return x_bound_; }
  // -1 for the zero polynomial.
  std::int64_t degree_y() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  bool is_zero() const { return rows_.empty(); }
  std::size_t term_count() const;
  std::vector<LatticePoint> support() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);

  // "y^2 - x^3" style rendering, highest y first.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Row> rows_;  // rows_[j] = coefficient of y^j
  std::optional<std::int64_t> x_bound_;
};

// Throws OrderExceedsDegree when k > deg_y f.
BivariatePoly derivative_y(const BivariatePoly& f, std::int64_t k);

// f(x^{n_sub}, y + lambda(x^{n_sub})); throws NonIntegralSubstitution when
// lambda(x^{n_sub}) has fractional exponents.
BivariatePoly hat_transform(const BivariatePoly& f, std::int64_t n_sub, const PuiseuxSeries& lambda);

// Newton diagram of the known part of f, with the information of which
// pieces the discarded x-terms could still change.
struct ObservedDiagram {
  NewtonDiagram diagram;
  bool certified = false;               // the whole diagram is final
  std::vector<bool> edge_certified;     // per compact edge
};

// Throws ZeroPolynomial.
ObservedDiagram diagram_of(const BivariatePoly& f);

// Squarefreeness of f_S(1,y) / y^{min} on the given compact edge of N(f).
// Throws EdgeNotOnPolygon.
bool edge_poly_squarefree(const BivariatePoly& f, const Edge& edge);

// Terms of f minimizing w_x*i + w_y*j for positive integer weights, or
// nullopt if discarded terms could still reach the minimum.
std::optional<BivariatePoly> weighted_initial_form(const BivariatePoly& f, const Integer& w_x,
                                                   const Integer& w_y);

// Univariate helpers over Q, dense, lowest degree first.
using UniPoly = std::vector<Coeff>;
UniPoly uni_gcd(UniPoly a, UniPoly b);
bool uni_squarefree(const UniPoly& p);

}  // namespace eqsing
