#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqsing/charclass.hpp"
#include "eqsing/diagram.hpp"
#include "eqsing/numeric.hpp"

namespace eqsing {

enum class FactorKind { Z, W };

// One irreducible factor of the generic k-th polar.
struct PolarFactor {
  std::size_t group = 0;  // l
  FactorKind kind = FactorKind::Z;
  std::size_t index = 0;  // 1-based among factors of the same kind in the group
  std::optional<Part> part;
  Integer multiplicity;
  Rational contact_with_f;
  Rational contact_with_semiroot;
  std::vector<Rational> char_exponents;

  // "z^(2)_1", "w^(1)_1"
  std::string name() const;
};

struct PolarGroup {
  std::size_t l = 0;
  Integer t;                 // 0 < t <= n_l, t = k mod n_l
  CanonicalRep derivative;   // long form of (m_l, n_l)^{(t)}
  Integer w_count;
  std::vector<PolarFactor> factors;
};

struct PolarPrediction {
  CharSequence cs;
  Integer k;
  std::vector<PolarGroup> groups;  // l = 1..i_k

  std::vector<PolarFactor> factors() const;
  Integer total_multiplicity() const;
  // Contacts between the factors in factors() order (diagonal left 0).
  std::vector<std::vector<Rational>> pairwise_contacts() const;
};

// Throws OrderOutOfRange unless 1 <= k < b0.
PolarPrediction predict(const CharSequence& cs, const Integer& k);

// Contact between two predicted factors.
Rational factor_contact(const PolarFactor& a, const PolarFactor& b);

struct EggersWallLeaf {
  enum class Kind { Branch, Semiroot, Z, W };
  Kind kind;
  std::string name;
  std::size_t group = 0;  // l for semiroots and factors
  Integer multiplicity;
  std::vector<Rational> char_exponents;
};

struct EggersWallNode {
  Rational value;                     // contact label; 0 at the root
  std::optional<std::size_t> leaf;    // set for leaves
  std::vector<std::size_t> children;
  Integer edge_index = 1;             // index label of the edge from the parent
};

struct EggersWallTree {
  std::vector<EggersWallLeaf> leaves;
  std::vector<EggersWallNode> nodes;  // nodes[0] is the root
  // Internal node ids from the root down to a leaf.
  std::vector<std::size_t> path(std::size_t leaf) const;
  // Values of the internal nodes passed on the way from the root to a leaf.
  std::vector<Rational> path_values(std::size_t leaf) const;
  // Value of the last common vertex of the paths to two leaves.
  Rational meet(std::size_t a, std::size_t b) const;
};

EggersWallTree export_eggers_wall(const PolarPrediction& p, bool include_branch);

}  // namespace eqsing
