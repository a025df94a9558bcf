#include "eqsing/report.hpp"

#include <algorithm>
#include <sstream>

namespace eqsing {

namespace {

Json point(const LatticePoint& p) { return Json::array({json_integer(p.x), json_integer(p.y)}); }
Json part(const Part& p) { return Json::array({json_integer(p.m), json_integer(p.n)}); }

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(json_rational(r));
  return a;
}

std::string kind_name(FactorKind k) { return k == FactorKind::Z ? "Z" : "W"; }

std::string leaf_kind(EggersWallLeaf::Kind k) {
  switch (k) {
    case EggersWallLeaf::Kind::Branch: return "branch";
    case EggersWallLeaf::Kind::Semiroot: return "semiroot";
    case EggersWallLeaf::Kind::Z: return "Z";
    case EggersWallLeaf::Kind::W: return "W";
  }
  return "?";
}

Json factor_json(const PolarFactor& f) {
  Json j;
  j["name"] = f.name();
  j["kind"] = kind_name(f.kind);
  j["part"] = f.part ? part(*f.part) : Json(nullptr);
  j["multiplicity"] = json_integer(f.multiplicity);
  j["contact_with_f"] = json_rational(f.contact_with_f);
  j["contact_with_semiroot"] = json_rational(f.contact_with_semiroot);
  j["char_exponents"] = rationals(f.char_exponents);
  return j;
}

Json parts_json(const std::vector<Part>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(part(p));
  return a;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_integer(x));
  return a;
}

}  // namespace

Json json_integer(const Integer& v) {
  if (auto i = try_int64(v)) return *i;
  return v.str();
}

Json json_rational(const Rational& r) { return to_string(r); }

Json to_json(const CharSequence& cs) {
  Json j;
  j["b"] = integers(cs.b());
  j["e"] = integers(cs.e());
  Json n = Json::array(), m = Json::array(), bbar = Json::array(), deg = Json::array();
  for (std::size_t l = 1; l <= cs.h(); ++l) {
    n.push_back(json_integer(cs.n(l)));
    m.push_back(json_integer(cs.m(l)));
    bbar.push_back(json_integer(cs.bbar(l)));
    deg.push_back(json_integer(cs.semiroot_degree(l)));
  }
  j["n"] = n;
  j["m"] = m;
  j["bbar"] = bbar;
  j["semiroot_degree"] = deg;
  return j;
}

Json to_json(const ContinuedFraction& cf) {
  Json j;
  j["value"] = json_rational(cf.value());
  j["h"] = integers(cf.quotients());
  Json conv = Json::array();
  for (std::ptrdiff_t i = -1; i <= static_cast<std::ptrdiff_t>(cf.length()); ++i) {
    conv.push_back({{"i", i}, {"p", json_integer(cf.p(i))}, {"q", json_integer(cf.q(i))}});
  }
  j["convergents"] = conv;
  return j;
}

Json to_json(const NewtonDiagram& d) {
  Json v = Json::array();
  for (const auto& p : d.vertices()) v.push_back(point(p));
  return {{"vertices", v}};
}

Json to_json(const CanonicalRep& rep) {
  Json j;
  j["offset"] = point(rep.offset);
  j["parts"] = parts_json(rep.parts);
  j["long"] = rep.is_long;
  return j;
}

Json to_json(const BivariatePoly& f) {
  Json j;
  j["trunc"] = f.x_bound() ? Json(*f.x_bound()) : Json(nullptr);
  Json terms = Json::array();
  for (std::int64_t y = f.degree_y(); y >= 0; --y) {
    for (const auto& [x, c] : f.rows()[static_cast<std::size_t>(y)]) {
      terms.push_back(Json::array({x, y, to_string(c)}));
    }
  }
  j["terms"] = terms;
  return j;
}

Json to_json(const PolarPrediction& p) {
  Json j;
  j["char"] = integers(p.cs.b());
  j["k"] = json_integer(p.k);
  j["i_k"] = p.groups.size();
  j["total_multiplicity"] = json_integer(p.total_multiplicity());
  Json groups = Json::array();
  for (const auto& g : p.groups) {
    Json gj;
    gj["l"] = g.l;
    gj["t"] = json_integer(g.t);
    gj["contact_with_f"] = json_rational(p.cs.exponent(g.l));
    gj["derivative"] = to_json(g.derivative);
    gj["w_count"] = json_integer(g.w_count);
    Json fs = Json::array();
    for (const auto& f : g.factors) fs.push_back(factor_json(f));
    gj["factors"] = fs;
    groups.push_back(gj);
  }
  j["groups"] = groups;
  auto fs = p.factors();
  Json names = Json::array();
  for (const auto& f : fs) names.push_back(f.name());
  Json table = Json::array();
  for (const auto& row : p.pairwise_contacts()) table.push_back(rationals(row));
  j["pairwise_contacts"] = {{"factors", names}, {"table", table}};
  return j;
}

Json to_json(const EggersWallTree& t) {
  Json leaves = Json::array();
  for (const auto& l : t.leaves) {
    leaves.push_back({{"name", l.name},
                      {"kind", leaf_kind(l.kind)},
                      {"multiplicity", json_integer(l.multiplicity)},
                      {"char_exponents", rationals(l.char_exponents)}});
  }
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    Json nj;
    nj["id"] = i;
    nj["contact"] = n.leaf ? Json(nullptr) : json_rational(n.value);
    nj["leaf"] = n.leaf ? Json(t.leaves[*n.leaf].name) : Json(nullptr);
    nj["edge_index"] = json_integer(n.edge_index);
    nj["children"] = n.children;
    nodes.push_back(nj);
  }
  return {{"leaves", leaves}, {"nodes", nodes}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["char"] = integers(r.cs.b());
  j["k"] = json_integer(r.k);
  j["verdict"] = to_string(r.verdict);
  j["degenerate_samples"] = r.degenerate_samples;
  Json seeds = Json::array();
  for (const auto& s : r.seeds) {
    Json sj;
    sj["seed"] = s.seed;
    sj["used_seed"] = s.used_seed;
    sj["attempts"] = s.attempts;
    sj["status"] = to_string(s.status);
    sj["note"] = s.note;
    sj["root"] = s.root;
    Json levels = Json::array();
    for (const auto& l : s.levels) {
      Json lj;
      lj["l"] = l.l;
      lj["status"] = to_string(l.status);
      lj["note"] = l.note;
      lj["substitution_degree"] = json_integer(l.s);
      lj["certified"] = l.certified;
      lj["hat_f"] = to_json(l.hat_f)["vertices"];
      lj["steep_structure"] = l.steep_structure;
      lj["expected"] = to_json(l.expected)["vertices"];
      lj["observed"] = to_json(l.observed)["vertices"];
      lj["oracle_agrees"] = l.oracle_agrees;
      lj["diagram_match"] = l.diagram_match;
      lj["steep_parts"] = parts_json(l.steep_parts);
      lj["steep_squarefree"] = l.steep_squarefree;
      lj["extracted_contacts"] = rationals(l.extracted_contacts);
      lj["aggregate"] = {{"observed", json_integer(l.aggregate_observed)},
                         {"expected", json_integer(l.aggregate_expected)}};
      levels.push_back(lj);
    }
    sj["levels"] = levels;
    Json inits = Json::array();
    for (const auto& i : s.initial_forms) {
      inits.push_back({{"l", i.l},
                       {"certified", i.certified},
                       {"match", i.match},
                       {"a", to_string(i.a)},
                       {"b", json_integer(i.b)},
                       {"expected", i.expected},
                       {"observed", i.observed}});
    }
    sj["initial_forms"] = inits;
    Json cmps = Json::array();
    for (const auto& c : s.comparisons) {
      Json mp = Json::array(), me = Json::array();
      for (const auto& x : c.predicted_multiplicities) mp.push_back(json_integer(x));
      for (const auto& x : c.extracted_multiplicities) me.push_back(json_integer(x));
      cmps.push_back({{"l", c.l},
                      {"predicted_parts", parts_json(c.predicted_parts)},
                      {"extracted_parts", parts_json(c.extracted_parts)},
                      {"predicted_contacts", rationals(c.predicted_contacts)},
                      {"extracted_contacts", rationals(c.extracted_contacts)},
                      {"predicted_multiplicities", mp},
                      {"extracted_multiplicities", me},
                      {"aggregate", {{"predicted", json_integer(c.predicted_aggregate)},
                                     {"observed", json_integer(c.observed_aggregate)}}},
                      {"parts_match", c.parts_match},
                      {"aggregate_match", c.aggregate_match}});
    }
    sj["comparisons"] = cmps;
    seeds.push_back(sj);
  }
  j["seeds"] = seeds;
  return j;
}

std::string rep_text(const CanonicalRep& rep) {
  std::string out;
  if (rep.offset != LatticePoint{0, 0} || rep.parts.empty()) {
    out = "quadrant(" + rep.offset.x.str() + "," + rep.offset.y.str() + ")";
  }
  for (std::size_t i = 0; i < rep.parts.size();) {
    std::size_t j = i;
    while (j < rep.parts.size() && rep.parts[j] == rep.parts[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += "(" + rep.parts[i].m.str() + "," + rep.parts[i].n.str() + ")";
    i = j;
  }
  return out;
}

std::string vertices_text(const NewtonDiagram& d) {
  std::string out;
  for (const auto& v : d.vertices()) {
    if (!out.empty()) out += " ";
    out += "(" + v.x.str() + "," + v.y.str() + ")";
  }
  return out;
}

std::string char_text(const std::vector<Rational>& chars) {
  std::string out = "{";
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (i) out += ", ";
    out += to_string(chars[i]);
  }
  return out + "}";
}

std::string text_report(const ContinuedFraction& cf, bool quiet) {
  std::ostringstream os;
  if (!quiet) os << to_string(cf.value()) << " = [";
  else os << "[";
  for (std::size_t i = 0; i < cf.quotients().size(); ++i) os << (i ? "," : "") << cf.quotients()[i];
  os << "]\n";
  for (std::ptrdiff_t i = 0; i <= static_cast<std::ptrdiff_t>(cf.length()); ++i) {
    os << "p_" << i << "/q_" << i << " = " << cf.p(i) << "/" << cf.q(i) << "\n";
  }
  return os.str();
}

std::string text_report(const PolarPrediction& p, bool quiet) {
  std::ostringstream os;
  const std::string k = p.k.str();
  if (!quiet) os << "K(" << p.cs.to_string() << "), k = " << k << "\n";
  os << "d^" << k << "f/dy^" << k << " =";
  for (const auto& g : p.groups) os << " Gamma^(" << g.l << ")";
  os << "\n";
  for (const auto& g : p.groups) {
    os << "cont(f,v) = " << to_string(p.cs.exponent(g.l)) << " for any irreducible factor v of Gamma^("
       << g.l << ")\n";
  }
  for (const auto& g : p.groups) {
    const auto n = p.cs.n(g.l), m = p.cs.m(g.l);
    os << "\nGamma^(" << g.l << "): Delta_" << g.l << " = (" << m << "," << n << "), Delta_" << g.l
       << "^(" << g.t << ") = " << rep_text(g.derivative) << ", " << g.w_count << " W-factor"
       << (g.w_count == 1 ? "" : "s") << "\n";
    for (const auto& f : g.factors) {
      os << "  * cont(f_" << g.l << ", " << f.name() << ") = " << to_string(f.contact_with_semiroot)
         << " and Char(" << f.name() << ") = " << char_text(f.char_exponents);
      if (f.char_exponents.empty()) os << " (smooth)";
      os << ", multiplicity " << f.multiplicity << "\n";
    }
  }
  if (!quiet) os << "\ntotal multiplicity " << p.total_multiplicity() << " = b0 - k\n";
  return os.str();
}

std::string text_report(const VerificationReport& r, bool quiet) {
  std::ostringstream os;
  if (!quiet) os << "verify K(" << r.cs.to_string() << "), k = " << r.k << "\n";
  for (const auto& s : r.seeds) {
    os << "seed " << s.seed;
    if (s.used_seed != s.seed) os << " (sample seed " << s.used_seed << ", attempt " << s.attempts << ")";
    os << ": " << to_string(s.status);
    if (!s.note.empty()) os << " - " << s.note;
    os << "\n";
    if (quiet) continue;
    os << "  root " << s.root << "\n";
    for (const auto& l : s.levels) {
      os << "  l=" << l.l << " " << to_string(l.status) << ": observed " << vertices_text(l.observed)
         << ", expected " << vertices_text(l.expected);
      if (!l.extracted_contacts.empty()) os << ", steep contacts " << char_text(l.extracted_contacts);
      os << ", aggregate " << l.aggregate_observed << "/" << l.aggregate_expected;
      if (!l.note.empty()) os << " (" << l.note << ")";
      os << "\n";
    }
    for (const auto& i : s.initial_forms) {
      os << "  initial form l=" << i.l << ": " << (!i.certified ? "UNKNOWN" : i.match ? "match" : "MISMATCH")
         << ", b = " << i.b << ", a = " << to_string(i.a) << "\n";
    }
  }
  os << "verdict " << to_string(r.verdict);
  if (r.degenerate_samples) os << " (" << r.degenerate_samples << " degenerate sample" << (r.degenerate_samples == 1 ? "" : "s") << ")";
  os << "\n";
  return os.str();
}

std::string to_dot(const EggersWallTree& t, const std::string& title) {
  std::ostringstream os;
  os << "digraph eggers_wall {\n";
  os << "  label=\"" << title << "\";\n";
  os << "  rankdir=BT;\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    os << "  n" << i << " [";
    if (n.leaf) {
      const auto& leaf = t.leaves[*n.leaf];
      os << "shape=plaintext, label=\"" << leaf.name;
      if (leaf.kind == EggersWallLeaf::Kind::Z || leaf.kind == EggersWallLeaf::Kind::W) {
        os << "\\nmult " << leaf.multiplicity;
      }
      os << "\"";
    } else if (i == 0) {
      os << "shape=plaintext, label=\"0\"";
    } else {
      os << "shape=circle, label=\"" << to_string(n.value) << "\"";
    }
    os << "];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (auto c : t.nodes[i].children) {
      os << "  n" << i << " -> n" << c << " [label=\"" << t.nodes[c].edge_index << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const NewtonDiagram& d) {
  const auto& vs = d.vertices();
  const std::int64_t W = to_int64(vs.back().x) + 2;
  const std::int64_t H = to_int64(vs.front().y) + 2;
  const double cell = std::clamp(480.0 / static_cast<double>(std::max(W, H)), 4.0, 40.0);
  const double pad = 20;
  auto X = [&](const Integer& x) { return pad + cell * x.convert_to<double>(); };
  auto Y = [&](const Integer& y) { return pad + cell * (static_cast<double>(H) - y.convert_to<double>()); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + cell * static_cast<double>(W)
     << "\" height=\"" << 2 * pad + cell * static_cast<double>(H) << "\">\n";
  // region: polygon closed through the far corners
  os << "  <polygon fill=\"#dde8f5\" stroke=\"none\" points=\"";
  os << X(vs.front().x) << "," << Y(Integer(H)) << " ";
  for (const auto& v : vs) os << X(v.x) << "," << Y(v.y) << " ";
  os << X(Integer(W)) << "," << Y(vs.back().y) << " " << X(Integer(W)) << "," << Y(Integer(H)) << "\"/>\n";
  if (W * H <= 40000) {
    for (std::int64_t x = 0; x <= W; ++x) {
      for (std::int64_t y = 0; y <= H; ++y) {
        bool in = d.contains({x, y});
        os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << (in ? 2 : 1)
           << "\" fill=\"" << (in ? "#333" : "#bbb") << "\"/>\n";
      }
    }
  }
  os << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
  for (const auto& v : vs) os << X(v.x) << "," << Y(v.y) << " ";
  os << "\"/>\n";
  for (const auto& v : vs) {
    os << "  <text x=\"" << X(v.x) + 4 << "\" y=\"" << Y(v.y) - 4 << "\" font-size=\"11\">(" << v.x << ","
       << v.y << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace eqsing
