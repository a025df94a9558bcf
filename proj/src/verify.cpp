#include "eqsing/verify.hpp"

#include <algorithm>
#include <random>

#include "eqsing/error.hpp"

namespace eqsing {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ull;

Part primitive(const Part& p) {
  Integer g = gcd(p.m, p.n);
  return {p.m / g, p.n / g};
}

PuiseuxSeries lambda_of(const WitnessBranch& w, std::size_t l) {
  return w.root.truncate_below(w.cs.exponent(l));
}

void check_order(const CharSequence& cs, std::size_t l, const Integer& k) {
  if (l < 1 || l > cs.h()) throw Error(ErrorCode::IndexOutOfRange, "level outside 1..h");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  if (k >= cs.e(l - 1)) {
    throw Error(ErrorCode::OrderTooLarge, "k = " + k.str() + " is not below e_" +
                                              std::to_string(l - 1) + " = " + cs.e(l - 1).str());
  }
}

Integer binomial(const Integer& n, const Integer& r) {
  Integer out = 1;
  for (Integer i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Degenerate: return "DEGENERATE";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::AllSeedsDegenerate: return "ALL_SEEDS_DEGENERATE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 2;
    default: return 3;
  }
}

std::int64_t default_x_trunc(const CharSequence& cs, std::int64_t k) {
  return to_int64(cs.bbar(cs.h()) + cs.multiplicity()) + k + 1;
}

WitnessBranch sample_witness(const CharSequence& cs, std::uint64_t seed,
                             std::optional<std::int64_t> extra_terms,
                             std::optional<std::int64_t> x_trunc) {
  const std::int64_t b0 = to_int64(cs.multiplicity());
  const std::int64_t extra = extra_terms.value_or(b0);
  if (extra < 0) throw Error(ErrorCode::InvalidArgument, "extra_terms must be nonnegative");
  const std::int64_t top = to_int64(cs.b(cs.h())) + extra * to_int64(cs.e(cs.h()));

  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<long>(rng() % 19) - 9; };
  auto draw_nonzero = [&] {
    long v = 0;
    while (v == 0) v = draw();
    return v;
  };

  PuiseuxSeries::Terms terms;
  std::size_t j = 0;  // b_j <= i < b_{j+1}
  for (std::int64_t i = b0; i <= top; ++i) {
    while (j < cs.h() && cs.b(j + 1) <= i) ++j;
    if (cs.b(j) == i && j > 0) {
      terms[i] = Coeff(draw_nonzero());
    } else if (i % to_int64(cs.e(j)) == 0) {
      long c = draw();
      if (c != 0) terms[i] = Coeff(c);
    }
  }
  PuiseuxSeries root(b0, std::move(terms));
  if (!(root.characteristic() == cs)) {
    throw std::logic_error("sampled root left the class " + cs.to_string());
  }
  const std::int64_t X = x_trunc.value_or(default_x_trunc(cs, 0));
  return {cs, root, min_poly(root, X), seed, X, true};
}

WitnessBranch witness_from_root(const PuiseuxSeries& root, std::int64_t x_trunc) {
  PuiseuxSeries r = root.reduce();
  CharSequence cs = r.characteristic();
  return {cs, r, min_poly(r, x_trunc), 0, x_trunc, false};
}

NewtonDiagram expected_hat_diagram(const CharSequence& cs, std::size_t l, const Integer& k,
                                   const NewtonDiagram& hat_f) {
  check_order(cs, l, k);
  const Part R{cs.m(l), cs.n(l)};
  Integer q, t;
  boost::multiprecision::divide_qr(k, R.n, q, t);

  CanonicalRep rep = canonical_rep(hat_f, true);
  Integer copies = 0;
  CanonicalRep L{rep.offset, {}, true};
  for (const auto& p : rep.parts) {
    auto c = compare_inclination(p, R);
    if (c == std::strong_ordering::equal) {
      ++copies;
    } else if (c == std::strong_ordering::less) {
      L.parts.push_back(p);
    }
  }
  for (Integer i = 0; i < copies - q - 1; ++i) L.parts.push_back(R);
  NewtonDiagram steep = symbolic_derivative(NewtonDiagram::elementary(R.m, R.n), t);
  return minkowski_sum(steep, L.to_diagram());
}

HatLevelResult check_hat_level(const WitnessBranch& w, std::size_t l, const Integer& k) {
  const CharSequence& cs = w.cs;
  check_order(cs, l, k);
  HatLevelResult r;
  r.l = l;
  r.k = k;
  r.s = cs.semiroot_degree(l);
  const Part R{cs.m(l), cs.n(l)};
  const std::int64_t s64 = to_int64(r.s);
  const PuiseuxSeries lambda = lambda_of(w, l);

  const BivariatePoly fh = hat_transform(w.f, s64, lambda);
  const ObservedDiagram of = diagram_of(fh);
  const BivariatePoly P = derivative_y(w.f, to_int64(k));
  const BivariatePoly Ph = hat_transform(P, s64, lambda);
  const ObservedDiagram op = diagram_of(Ph);
  r.hat_f = of.diagram;
  r.observed = op.diagram;
  r.certified = of.certified && op.certified;

  {
    CanonicalRep rep = canonical_rep(r.hat_f, true);
    Integer copies = 0;
    bool steeper = false;
    for (const auto& p : rep.parts) {
      auto c = compare_inclination(p, R);
      if (c == std::strong_ordering::equal) ++copies;
      if (c == std::strong_ordering::greater) steeper = true;
    }
    r.steep_structure = !steeper && copies == cs.e(l) && r.hat_f.is_convenient() &&
                        r.hat_f.bottom_right() == LatticePoint{cs.bbar(l), 0};
  }

  r.expected = expected_hat_diagram(cs, l, k, r.hat_f);
  r.oracle_agrees = (symbolic_derivative(r.hat_f, k) == r.expected);
  r.contained = std::all_of(r.observed.vertices().begin(), r.observed.vertices().end(),
                            [&](const LatticePoint& v) { return r.expected.contains(v); });
  r.diagram_match = (r.observed == r.expected);

  r.aggregate_observed = 0;
  const auto edges = r.observed.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    Part v = it->vector();
    auto c = compare_inclination(v, R);
    if (c == std::strong_ordering::equal) r.aggregate_observed += v.n;
    if (c != std::strong_ordering::greater) continue;
    r.steep_edges.push_back(*it);
    r.steep_squarefree.push_back(edge_poly_squarefree(Ph, *it));
    Part prim = primitive(v);
    for (Integer i = 0; i < v.m / prim.m; ++i) {
      r.steep_parts.push_back(prim);
      r.extracted_contacts.push_back(Rational(prim.m, r.s * prim.n));
    }
  }
  r.aggregate_expected = R.n * (cs.e(l) - ceil_div(k, R.n));

  const bool nondegenerate =
      std::all_of(r.steep_squarefree.begin(), r.steep_squarefree.end(), [](bool b) { return b; });
  if (!r.certified) {
    r.status = CheckStatus::Unknown;
    r.note = "x-truncation too short to certify the diagrams";
  } else if (!r.steep_structure) {
    r.status = CheckStatus::Fail;
    r.note = "hat diagram of f does not end with e_l copies of (m_l,n_l) at (bbar_l,0)";
  } else if (!r.oracle_agrees) {
    r.status = CheckStatus::Fail;
    r.note = "R^(t)+L differs from the lattice derivative of the hat diagram";
  } else if (!r.contained) {
    r.status = CheckStatus::Fail;
    r.note = "observed diagram leaves the symbolic derivative";
  } else if (!r.diagram_match || !nondegenerate) {
    r.status = CheckStatus::Degenerate;
    r.note = !nondegenerate ? "steep edge polynomial has a repeated root"
                            : "coefficient cancellation: observed diagram smaller than predicted";
  } else if (r.aggregate_observed != r.aggregate_expected) {
    r.status = CheckStatus::Fail;
    r.note = "vertical length at inclination m_l/n_l disagrees";
  } else {
    r.status = CheckStatus::Pass;
  }
  return r;
}

InitialFormResult check_initial_form(const WitnessBranch& w, std::size_t l) {
  const CharSequence& cs = w.cs;
  if (l < 1 || l > cs.h()) throw Error(ErrorCode::IndexOutOfRange, "level outside 1..h");
  if (w.root.denom() != to_int64(cs.multiplicity())) {
    throw Error(ErrorCode::IndexMismatch, "witness root must be written over b0");
  }
  InitialFormResult r;
  r.l = l;
  const std::int64_t s = to_int64(cs.semiroot_degree(l));
  const BivariatePoly fh = hat_transform(w.f, s, lambda_of(w, l));
  const Integer n = cs.n(l), m = cs.m(l), e = cs.e(l);
  auto init = weighted_initial_form(fh, n, m);

  r.a = 1;
  for (std::size_t j = 1; j < l; ++j) {
    Coeff nj = to_coeff(cs.n(j));
    Coeff abj = w.root.coeff(to_int64(cs.b(j)));
    for (Integer u = 0; u < cs.e(j); ++u) r.a *= nj;
    for (Integer u = 0; u < cs.e(j - 1) - cs.e(j); ++u) r.a *= abj;
  }
  r.b = cs.bbar(l) - cs.b(l);
  Coeff cn = 1;
  const Coeff c = w.root.coeff(to_int64(cs.b(l)));
  for (Integer u = 0; u < n; ++u) cn *= c;

  BivariatePoly expected;
  for (Integer rr = 0; rr <= e; ++rr) {
    Coeff term = r.a * to_coeff(binomial(e, rr));
    for (Integer u = 0; u < rr; ++u) term *= -cn;
    expected.add(to_int64(r.b + m * rr), to_int64(n * (e - rr)), term);
  }
  r.expected = expected.to_string();
  if (!init) {
    r.certified = false;
    r.observed = "unknown (truncated)";
    return r;
  }
  r.certified = true;
  r.observed = init->to_string();
  r.match = (*init == expected);
  return r;
}

SeedReport verify_witness(const WitnessBranch& w, const PolarPrediction& p) {
  SeedReport rep;
  rep.seed = w.seed;
  rep.used_seed = w.seed;
  rep.attempts = 1;
  rep.root = w.root.to_string();
  const CharSequence& cs = w.cs;

  for (const auto& g : p.groups) rep.levels.push_back(check_hat_level(w, g.l, p.k));
  for (std::size_t l = 1; l <= cs.h(); ++l) rep.initial_forms.push_back(check_initial_form(w, l));

  for (std::size_t gi = 0; gi < p.groups.size(); ++gi) {
    const auto& g = p.groups[gi];
    const auto& lvl = rep.levels[gi];
    GroupComparison c;
    c.l = g.l;
    Integer deeper = 0;
    for (const auto& f : g.factors) {
      if (f.kind == FactorKind::Z) {
        c.predicted_parts.push_back(*f.part);
        c.predicted_contacts.push_back(f.contact_with_semiroot);
        c.predicted_multiplicities.push_back(f.multiplicity);
      } else {
        deeper += f.multiplicity;
      }
    }
    for (std::size_t gj = gi + 1; gj < p.groups.size(); ++gj) {
      for (const auto& f : p.groups[gj].factors) deeper += f.multiplicity;
    }
    c.extracted_parts = lvl.steep_parts;
    c.extracted_contacts = lvl.extracted_contacts;
    for (const auto& part : lvl.steep_parts) c.extracted_multiplicities.push_back(lvl.s * part.n);
    // Degrees in the hat chart shrink by the substitution x -> x^s.
    c.predicted_aggregate = deeper % lvl.s == 0 ? Integer(deeper / lvl.s) : Integer(-1);
    c.observed_aggregate = lvl.aggregate_observed;
    c.parts_match = c.predicted_parts == c.extracted_parts &&
                    c.predicted_contacts == c.extracted_contacts &&
                    c.predicted_multiplicities == c.extracted_multiplicities;
    c.aggregate_match = c.predicted_aggregate == c.observed_aggregate;
    rep.comparisons.push_back(std::move(c));
  }

  auto any_level = [&](CheckStatus s) {
    return std::any_of(rep.levels.begin(), rep.levels.end(), [&](const auto& r) { return r.status == s; });
  };
  bool init_fail = false, init_unknown = false;
  for (const auto& i : rep.initial_forms) {
    if (!i.certified) init_unknown = true;
    else if (!i.match) init_fail = true;
  }
  bool cmp_fail = std::any_of(rep.comparisons.begin(), rep.comparisons.end(),
                              [](const auto& c) { return !c.parts_match || !c.aggregate_match; });

  if (any_level(CheckStatus::Fail) || init_fail) {
    rep.status = CheckStatus::Fail;
    rep.note = init_fail ? "initial form disagrees with the closed formula" : "hat diagram contradicts the prediction";
  } else if (any_level(CheckStatus::Degenerate)) {
    rep.status = CheckStatus::Degenerate;
    rep.note = "witness is not generic";
  } else if (any_level(CheckStatus::Unknown) || init_unknown) {
    rep.status = CheckStatus::Unknown;
    rep.note = "truncation too short";
  } else if (cmp_fail) {
    rep.status = CheckStatus::Fail;
    rep.note = "extracted steep data disagrees with the prediction";
  } else {
    rep.status = CheckStatus::Pass;
  }
  return rep;
}

VerificationReport verify_prediction(const CharSequence& cs, const Integer& k,
                                     const std::vector<std::uint64_t>& seeds, const VerifyOptions& opt) {
  VerificationReport report{cs, k, predict(cs, k), {}, Verdict::Unknown, 0};
  const std::int64_t X = opt.x_trunc.value_or(default_x_trunc(cs, to_int64(k)));
  for (std::uint64_t seed : seeds) {
    SeedReport sr;
    for (int attempt = 0; attempt < std::max(1, opt.max_attempts); ++attempt) {
      const std::uint64_t used = seed + static_cast<std::uint64_t>(attempt) * kSeedStride;
      WitnessBranch w = sample_witness(cs, used, opt.extra_terms, X);
      sr = verify_witness(w, report.prediction);
      sr.seed = seed;
      sr.used_seed = used;
      sr.attempts = attempt + 1;
      if (sr.status != CheckStatus::Degenerate) break;
      ++report.degenerate_samples;
    }
    report.seeds.push_back(std::move(sr));
  }
  auto any = [&](CheckStatus s) {
    return std::any_of(report.seeds.begin(), report.seeds.end(), [&](const auto& r) { return r.status == s; });
  };
  auto all = [&](CheckStatus s) {
    return std::all_of(report.seeds.begin(), report.seeds.end(), [&](const auto& r) { return r.status == s; });
  };
  if (any(CheckStatus::Fail)) {
    report.verdict = Verdict::Fail;
  } else if (any(CheckStatus::Pass)) {
    report.verdict = Verdict::Pass;
  } else if (!report.seeds.empty() && all(CheckStatus::Degenerate)) {
    report.verdict = Verdict::AllSeedsDegenerate;
  } else {
    report.verdict = Verdict::Unknown;
  }
  return report;
}

VerificationReport verify_root(const PuiseuxSeries& root, const Integer& k, std::optional<std::int64_t> x_trunc) {
  PuiseuxSeries r = root.reduce();
  CharSequence cs = r.characteristic();
  const std::int64_t X = x_trunc.value_or(default_x_trunc(cs, to_int64(k)));
  WitnessBranch w = witness_from_root(r, X);
  VerificationReport report{cs, k, predict(cs, k), {}, Verdict::Unknown, 0};
  report.seeds.push_back(verify_witness(w, report.prediction));
  switch (report.seeds.front().status) {
    case CheckStatus::Pass: report.verdict = Verdict::Pass; break;
    case CheckStatus::Fail:
    case CheckStatus::Degenerate: report.verdict = Verdict::Fail; break;
    case CheckStatus::Unknown: report.verdict = Verdict::Unknown; break;
  }
  if (report.seeds.front().status == CheckStatus::Degenerate) report.degenerate_samples = 1;
  return report;
}

}  // namespace eqsing
