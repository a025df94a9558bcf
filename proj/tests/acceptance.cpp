// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "eqsing/diagram.hpp"
#include "eqsing/polar.hpp"
#include "eqsing/polynomial.hpp"
#include "eqsing/puiseux.hpp"
#include "eqsing/verify.hpp"
#include "support.hpp"
#include "unity.hpp"

using namespace eqsing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational r(long p, long q = 1) { return Rational(p, q); }

// Factor data of one group as (kind, cont with semiroot, Char, multiplicity).
struct Want {
  FactorKind kind;
  Rational semiroot;
  std::vector<Rational> chars;
  long mult;
};

void expect_group(Outcome& o, const PolarPrediction& p, std::size_t idx, Rational cont_f,
                  const std::vector<Want>& want) {
  std::string tag = "k=" + p.k.str() + " group " + std::to_string(idx + 1);
  if (idx >= p.groups.size()) {
    o.require(false, tag + " missing");
    return;
  }
  const auto& g = p.groups[idx];
  o.require(g.factors.size() == want.size(), tag + ": factor count");
  for (std::size_t i = 0; i < std::min(want.size(), g.factors.size()); ++i) {
    const auto& f = g.factors[i];
    o.require(f.kind == want[i].kind, tag + ": kind of " + f.name());
    o.require(f.contact_with_semiroot == want[i].semiroot, tag + ": semiroot contact of " + f.name());
    o.require(f.char_exponents == want[i].chars, tag + ": Char of " + f.name());
    o.require(f.multiplicity == want[i].mult, tag + ": multiplicity of " + f.name());
    o.require(f.contact_with_f == cont_f, tag + ": contact with f of " + f.name());
  }
}

constexpr auto Z = FactorKind::Z;
constexpr auto W = FactorKind::W;

Outcome ac1() {
  Outcome o;
  auto p = predict(CharSequence::parse("12,16,31"), 1);
  o.require(p.groups.size() == 2, "two groups");
  expect_group(o, p, 0, r(4, 3), {{Z, r(3, 2), {r(3, 2)}, 2}});
  expect_group(o, p, 1, r(31, 12), {{Z, r(8, 3), {r(4, 3)}, 3}, {Z, r(8, 3), {r(4, 3)}, 3}, {Z, r(8, 3), {r(4, 3)}, 3}});
  return o;
}

Outcome ac2() {
  Outcome o;
  auto cs = CharSequence::parse("12,16,31");
  auto p = predict(cs, 2);
  o.require(p.groups.size() == 2, "k=2: two groups");
  expect_group(o, p, 0, r(4, 3), {{Z, r(2), {}, 1}, {W, r(4, 3), {r(4, 3)}, 3}});
  expect_group(o, p, 1, r(31, 12), {{Z, r(8, 3), {r(4, 3)}, 3}, {Z, r(8, 3), {r(4, 3)}, 3}});
  auto q = predict(cs, 10);
  o.require(q.groups.size() == 1, "k=10: one group");
  expect_group(o, q, 0, r(4, 3), {{Z, r(3, 2), {r(3, 2)}, 2}});
  return o;
}

Outcome ac3() {
  Outcome o;
  auto cs = CharSequence::parse("10,14,15");
  auto p = predict(cs, 1);
  o.require(p.groups.size() == 2, "k=1: two groups");
  if (p.groups.size() == 2) {
    o.require(p.groups[0].derivative.parts == std::vector<Part>{{3, 2}, {3, 2}}, "Delta_1^(1) = 2(3,2)");
    o.require(p.groups[1].derivative.parts == std::vector<Part>{{8, 1}}, "Delta_2^(1) = (8,1)");
  }
  expect_group(o, p, 0, r(7, 5), {{Z, r(3, 2), {r(3, 2)}, 2}, {Z, r(3, 2), {r(3, 2)}, 2}});
  expect_group(o, p, 1, r(3, 2), {{Z, r(8, 5), {r(7, 5)}, 5}});
  auto q = predict(cs, 2);
  o.require(q.groups.size() == 1, "k=2: one group");
  if (!q.groups.empty()) {
    o.require(q.groups[0].derivative.parts == std::vector<Part>{{2, 1}, {3, 2}}, "Delta_1^(2) = (2,1)+(3,2)");
  }
  expect_group(o, q, 0, r(7, 5), {{Z, r(2), {}, 1}, {Z, r(3, 2), {r(3, 2)}, 2}, {W, r(7, 5), {r(7, 5)}, 5}});
  return o;
}

Outcome ac4() {
  Outcome o;
  auto root = PuiseuxSeries::parse("x^(4/3)+x^2+x^(31/12)");
  auto g = min_poly(root, 1000);
  o.require(!g.x_bound().has_value(), "minimal polynomial is exact");
  o.require(g.degree_y() == 12 && g.coeff(0, 12) == 1, "monic of degree 12");
  o.require(g.rows()[11].size() == 1 && g.coeff(2, 11) == -12, "y^11 coefficient -12x^2");
  o.require(g.rows()[10].size() == 1 && g.coeff(4, 10) == 66, "y^10 coefficient 66x^4");
  Coeff c(6L * 39916800L);
  BivariatePoly want;
  want.add(0, 2, c);
  want.add(2, 1, -2 * c);
  want.add(4, 0, c);
  o.require(derivative_y(g, 10) == want, "10th derivative is 6*11!(y-x^2)^2");
  auto w = witness_from_root(root, default_x_trunc(root.characteristic(), 10));
  auto nd = check_hat_level(w, 1, 10);
  o.require(nd.status == CheckStatus::Degenerate, "steep edge flagged degenerate, got " + to_string(nd.status));
  auto rep = verify_root(root, 10);
  o.require(rep.verdict == Verdict::Fail, "verify on the explicit root fails");
  return o;
}

Outcome ac5() {
  Outcome o;
  int mismatches = 0, pairs = 0;
  for (int m = 2; m <= 50; ++m) {
    for (int n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      auto closed = elementary_derivative_closed_form(m, n).to_diagram();
      auto lattice = symbolic_derivative(NewtonDiagram::elementary(m, n), 1);
      bool ok = closed == lattice && testing_support::chain(closed) == testing_support::elementary_oracle(m, n, 1);
      if (!ok) ++mismatches;
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail = o.ok ? std::to_string(pairs) + " pairs" : o.detail;
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> coord(0, 200), count(1, 8);
  long checks = 0, mismatches = 0;
  for (int it = 0; it < 1000; ++it) {
    std::vector<LatticePoint> pts;
    int c = count(rng);
    for (int i = 0; i < c; ++i) pts.push_back({coord(rng), coord(rng)});
    auto d = from_support(pts);
    auto top = static_cast<long>(d.top_left().y);
    // D_j = d^{(j)} for every j; (D_k)^{(l)} must equal D_{k+l}
    std::vector<NewtonDiagram> direct;
    direct.reserve(top + 1);
    for (long j = 0; j <= top; ++j) direct.push_back(symbolic_derivative(d, j));
    for (long k = 0; k <= top; ++k) {
      for (long l = 0; k + l <= top; ++l) {
        ++checks;
        if (!(symbolic_derivative(direct[k], l) == direct[k + l])) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.ok) o.detail = std::to_string(checks) + " pairs (k,l)";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(777);
  long checks = 0;
  for (int it = 0; it < 200; ++it) {
    auto cs = testing_support::random_char(rng, 64);
    for (Integer k = 1; k < cs.multiplicity(); ++k) {
      ++checks;
      auto p = predict(cs, k);
      o.require(p.total_multiplicity() == cs.multiplicity() - k, cs.to_string() + " k=" + k.str());
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " (class, k) pairs";
  return o;
}

void check_class(Outcome& o, const char* text, std::initializer_list<int> orders, const Integer& bbar2) {
  auto cs = CharSequence::parse(text);
  o.require(cs.bbar(2) == bbar2, std::string(text) + ": bbar_2");
  auto start = Clock::now();
  for (int k : orders) {
    auto rep = verify_prediction(cs, k, {1, 2, 3, 4, 5});
    std::string tag = std::string(text) + " k=" + std::to_string(k);
    o.require(rep.verdict == Verdict::Pass, tag + ": verdict " + to_string(rep.verdict));
    for (const auto& s : rep.seeds) {
      o.require(s.status == CheckStatus::Pass, tag + ": seed " + std::to_string(s.seed) + " " + to_string(s.status));
      for (const auto& c : s.comparisons) {
        o.require(c.extracted_parts == c.predicted_parts, tag + ": steep parts");
        o.require(c.extracted_contacts == c.predicted_contacts, tag + ": contacts");
        o.require(c.extracted_multiplicities == c.predicted_multiplicities, tag + ": multiplicities");
        o.require(c.aggregate_match, tag + ": aggregate");
      }
      bool saw_level2 = false;
      for (const auto& f : s.initial_forms) {
        o.require(f.certified && f.match, tag + ": initial form l=" + std::to_string(f.l));
        if (f.l == 2) {
          saw_level2 = true;
          o.require(f.b == bbar2 - cs.b(2), tag + ": x-exponent of the initial form");
        }
      }
      o.require(saw_level2, tag + ": initial form at l=2 checked");
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 60, std::string(text) + " took " + std::to_string(secs) + " s");
}

Outcome ac8() {
  Outcome o;
  check_class(o, "12,16,31", {1, 2, 10}, 63);
  check_class(o, "10,14,15", {1, 2}, 71);
  return o;
}

Outcome ac9() {
  Outcome o;
  double worst = 0;
  for (unity::C c : {unity::C(0.8, -0.35), unity::C(0.6, 0.7), unity::C(-0.5, 0.0)}) {
    unity::for_each_level(24, [&](int E, int e, int b) { worst = std::max(worst, unity::binomial_error(E, e, b, c)); });
  }
  unity::for_each_level(24, [&](int E, int e, int b) { worst = std::max(worst, unity::norm_error(E, e, b)); });
  for (int n = 1; n <= 24; ++n) {
    for (int i = -30; i <= 60; ++i) worst = std::max(worst, unity::sum_error(n, i));
  }
  std::ostringstream s;
  s << "max error " << worst;
  o.require(worst < 1e-9, s.str());
  if (o.ok) o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {"AC1", 1, ac1},  {"AC2", 1, ac2},   {"AC3", 1, ac3}, {"AC4", 10, ac4}, {"AC5", 30, ac5},
      {"AC6", 0, ac6},  {"AC7", 0, ac7},   {"AC8", 120, ac8}, {"AC9", 0, ac9},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    std::printf("%s %s (%.3f s)%s%s\n", c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed ? 1 : 0;
}
