#include "eqsing/polar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "eqsing/error.hpp"

namespace eqsing {

std::string PolarFactor::name() const {
  return std::string(kind == FactorKind::Z ? "z" : "w") + "^(" + std::to_string(group) + ")_" +
         std::to_string(index);
}

std::vector<PolarFactor> PolarPrediction::factors() const {
  std::vector<PolarFactor> out;
  for (const auto& g : groups) out.insert(out.end(), g.factors.begin(), g.factors.end());
  return out;
}

Integer PolarPrediction::total_multiplicity() const {
  Integer s = 0;
  for (const auto& g : groups) {
    for (const auto& f : g.factors) s += f.multiplicity;
  }
  return s;
}

Rational factor_contact(const PolarFactor& a, const PolarFactor& b) {
  if (a.group == b.group) return std::min(a.contact_with_semiroot, b.contact_with_semiroot);
  return std::min(a.contact_with_f, b.contact_with_f);
}

std::vector<std::vector<Rational>> PolarPrediction::pairwise_contacts() const {
  auto fs = factors();
  std::vector<std::vector<Rational>> table(fs.size(), std::vector<Rational>(fs.size(), Rational(0)));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i != j) table[i][j] = factor_contact(fs[i], fs[j]);
    }
  }
  return table;
}

PolarPrediction predict(const CharSequence& cs, const Integer& k) {
  if (k <= 0 || k >= cs.multiplicity()) {
    throw Error(ErrorCode::OrderOutOfRange,
                "k = " + k.str() + " outside 1.." + Integer(cs.multiplicity() - 1).str());
  }
  const Integer& b0 = cs.multiplicity();
  PolarPrediction p{cs, k, {}};
  for (std::size_t l = 1; l <= cs.h() && cs.e(l - 1) > k; ++l) {
    const Integer& n = cs.n(l);
    const Integer& m = cs.m(l);
    const Integer s = cs.semiroot_degree(l);
    PolarGroup g;
    g.l = l;
    g.t = mod_floor(k - 1, n) + 1;
    g.derivative = derivative_by_parts(canonical_rep(NewtonDiagram::elementary(m, n), true), g.t);

    std::vector<Rational> lower;  // b_1/b_0 .. b_{l-1}/b_0
    for (std::size_t i = 1; i < l; ++i) lower.push_back(cs.exponent(i));
    const Rational cont_f = cs.exponent(l);

    std::size_t zi = 0;
    for (const auto& part : g.derivative.parts) {
      PolarFactor z;
      z.group = l;
      z.kind = FactorKind::Z;
      z.index = ++zi;
      z.part = part;
      z.multiplicity = s * part.n;
      z.contact_with_f = cont_f;
      z.contact_with_semiroot = Rational(part.m, s * part.n);
      z.char_exponents = lower;
      if (part.n > 1) {
        if (!lower.empty() && z.contact_with_semiroot <= lower.back()) {
          throw std::logic_error("new characteristic exponent does not exceed b_{l-1}/b_0");
        }
        z.char_exponents.push_back(z.contact_with_semiroot);
      }
      if (z.contact_with_semiroot <= cont_f) {
        throw std::logic_error("Z-factor contact with the semiroot must exceed b_l/b_0");
      }
      g.factors.push_back(std::move(z));
    }
    // Long parts come steepest first, which is descending contact already.
    std::stable_sort(g.factors.begin(), g.factors.end(), [](const PolarFactor& a, const PolarFactor& b) {
      return a.contact_with_semiroot > b.contact_with_semiroot;
    });
    for (std::size_t i = 0; i < g.factors.size(); ++i) g.factors[i].index = i + 1;

    g.w_count = std::min(cs.e(l), k) - ceil_div(k, n);
    std::vector<Rational> wchar = lower;
    wchar.push_back(cont_f);
    for (Integer i = 0; i < g.w_count; ++i) {
      PolarFactor w;
      w.group = l;
      w.kind = FactorKind::W;
      w.index = static_cast<std::size_t>(i) + 1;
      w.multiplicity = b0 / cs.e(l);
      w.contact_with_f = cont_f;
      w.contact_with_semiroot = cont_f;
      w.char_exponents = wchar;
      g.factors.push_back(std::move(w));
    }
    p.groups.push_back(std::move(g));
  }
  return p;
}

namespace {

Integer exponent_index(const std::vector<Rational>& chars, const Rational& upto) {
  Integer d = 1;
  for (const auto& c : chars) {
    if (c <= upto) d = lcm(d, denominator_of(c));
  }
  return d;
}

}  // namespace

EggersWallTree export_eggers_wall(const PolarPrediction& p, bool include_branch) {
  const CharSequence& cs = p.cs;
  EggersWallTree tree;
  auto factors = p.factors();

  if (include_branch) {
    std::vector<Rational> all;
    for (std::size_t i = 1; i <= cs.h(); ++i) all.push_back(cs.exponent(i));
    tree.leaves.push_back({EggersWallLeaf::Kind::Branch, "f", 0, 1, all});
    for (std::size_t l = 1; l <= cs.h(); ++l) {
      std::vector<Rational> ch(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(l - 1));
      tree.leaves.push_back({EggersWallLeaf::Kind::Semiroot, "f_" + std::to_string(l), l, 1, ch});
    }
  }
  const std::size_t first_factor = tree.leaves.size();
  for (const auto& f : factors) {
    tree.leaves.push_back({f.kind == FactorKind::Z ? EggersWallLeaf::Kind::Z : EggersWallLeaf::Kind::W,
                           f.name(), f.group, f.multiplicity, f.char_exponents});
  }

  auto cont = [&](std::size_t a, std::size_t b) -> Rational {
    using K = EggersWallLeaf::Kind;
    auto is_factor = [](const EggersWallLeaf& x) { return x.kind == K::Z || x.kind == K::W; };
    if (is_factor(tree.leaves[a])) std::swap(a, b);
    const auto& A = tree.leaves[a];
    const auto& B = tree.leaves[b];
    if (is_factor(A)) return factor_contact(factors[a - first_factor], factors[b - first_factor]);
    // A is the branch or a semiroot
    if (A.kind == K::Branch) return cs.exponent(B.group);
    if (B.kind == K::Branch) return cs.exponent(A.group);
    if (B.kind == K::Semiroot) return cs.exponent(std::min(A.group, B.group));
    const auto& fb = factors[b - first_factor];
    if (fb.group == A.group) return fb.contact_with_semiroot;
    return cs.exponent(std::min(A.group, fb.group));
  };

  tree.nodes.push_back({Rational(0), std::nullopt, {}, 1});
  std::function<std::size_t(const std::vector<std::size_t>&, const Rational&)> build =
      [&](const std::vector<std::size_t>& set, const Rational& parent) -> std::size_t {
    const Integer label = exponent_index(tree.leaves[set.front()].char_exponents, parent);
    if (set.size() == 1) {
      tree.nodes.push_back({Rational(0), set.front(), {}, label});
      return tree.nodes.size() - 1;
    }
    std::optional<Rational> low;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        Rational c = cont(set[i], set[j]);
        if (!low || c < *low) low = c;
      }
    }
    tree.nodes.push_back({*low, std::nullopt, {}, label});
    const std::size_t id = tree.nodes.size() - 1;
    std::vector<bool> used(set.size(), false);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> cls{set[i]};
      used[i] = true;
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (!used[j] && cont(set[i], set[j]) > *low) {
          cls.push_back(set[j]);
          used[j] = true;
        }
      }
      std::size_t child = build(cls, *low);
      tree.nodes[id].children.push_back(child);
    }
    return id;
  };

  if (!tree.leaves.empty()) {
    std::vector<std::size_t> all(tree.leaves.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::size_t top = build(all, Rational(0));
    tree.nodes[0].children.push_back(top);
  }
  return tree;
}

std::vector<std::size_t> EggersWallTree::path(std::size_t leaf) const {
  std::vector<std::size_t> ids;
  std::function<bool(std::size_t)> walk = [&](std::size_t id) {
    const auto& node = nodes[id];
    if (node.leaf) return *node.leaf == leaf;
    ids.push_back(id);
    for (auto c : node.children) {
      if (walk(c)) return true;
    }
    ids.pop_back();
    return false;
  };
  walk(0);
  return ids;
}

std::vector<Rational> EggersWallTree::path_values(std::size_t leaf) const {
  std::vector<Rational> out;
  for (auto id : path(leaf)) out.push_back(nodes[id].value);
  return out;
}

Rational EggersWallTree::meet(std::size_t a, std::size_t b) const {
  auto pa = path(a), pb = path(b);
  std::size_t i = 0;
  while (i < pa.size() && i < pb.size() && pa[i] == pb[i]) ++i;
  return i == 0 ? Rational(0) : nodes[pa[i - 1]].value;
}

}  // namespace eqsing
