#include <doctest.h>

#include "eqsing/error.hpp"
#include "eqsing/report.hpp"
#include "eqsing/verify.hpp"

using namespace eqsing;

namespace {

const PuiseuxSeries& g_root() {
  static const PuiseuxSeries g = PuiseuxSeries::parse("x^(4/3)+x^2+x^(31/12)");
  return g;
}

std::vector<Part> steep_parts_of(const CanonicalRep& rep, const Part& r) {
  std::vector<Part> out;
  for (const auto& p : rep.parts) {
    if (compare_inclination(p, r) == std::strong_ordering::greater) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("sampled witnesses belong to their class") {
    for (const char* text : {"2,3", "4,6,7", "6,9,11", "12,16,31", "10,14,15", "12,16,30,31"}) {
      auto cs = CharSequence::parse(text);
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto w = sample_witness(cs, seed);
        CHECK(w.root.characteristic() == cs);
        CHECK(w.f.degree_y() == cs.multiplicity());
        CHECK(w.x_trunc == default_x_trunc(cs, 0));
        CHECK(sample_witness(cs, seed).root == w.root);
      }
    }
  }

  TEST_CASE("expected hat diagrams") {
    auto cs = CharSequence::parse("12,16,31");
    auto w = sample_witness(cs, 3);
    auto lam = w.root.truncate_below(cs.exponent(2));
    auto hat = diagram_of(hat_transform(w.f, 3, lam)).diagram;
    auto e1 = expected_hat_diagram(cs, 2, 1, hat);
    CHECK(steep_parts_of(canonical_rep(e1, true), {31, 4}) == std::vector<Part>{{8, 1}, {8, 1}, {8, 1}});
    CHECK(expected_hat_diagram(cs, 2, 0, hat) == hat);
    CHECK_THROWS_AS(expected_hat_diagram(cs, 2, 4, hat), Error);

    auto cs2 = CharSequence::parse("10,14,15");
    auto w2 = sample_witness(cs2, 1);
    auto hat2 = diagram_of(hat_transform(w2.f, 1, w2.root.truncate_below(cs2.exponent(1)))).diagram;
    auto e2 = expected_hat_diagram(cs2, 1, 2, hat2);
    CHECK(steep_parts_of(canonical_rep(e2, true), {7, 5}) == std::vector<Part>{{2, 1}, {3, 2}});
  }

  TEST_CASE("Hat-level checks on a generic witness") {
    auto cs = CharSequence::parse("12,16,31");
    auto w = sample_witness(cs, 1, std::nullopt, default_x_trunc(cs, 10));
    auto r = check_hat_level(w, 1, 10);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.steep_parts == std::vector<Part>{{3, 2}});
    CHECK(r.extracted_contacts == std::vector<Rational>{Rational(3, 2)});
    auto r0 = check_hat_level(w, 2, 0);
    CHECK(r0.observed == r0.hat_f);
  }

  TEST_CASE("the all-ones witness is caught at k = 10") {
    auto w = witness_from_root(g_root(), default_x_trunc(g_root().characteristic(), 10));
    auto r = check_hat_level(w, 1, 10);
    CHECK(r.status == CheckStatus::Degenerate);
    CHECK_FALSE(r.steep_squarefree.empty());
    CHECK_FALSE(r.steep_squarefree[0]);
    auto report = verify_root(g_root(), 10);
    CHECK(report.verdict == Verdict::Fail);
    CHECK(exit_code(report.verdict) == 2);
  }

  TEST_CASE("initial forms") {
    auto cusp = witness_from_root(PuiseuxSeries::parse("x^(3/2)"), 10);
    auto c = check_initial_form(cusp, 1);
    CHECK(c.match);
    CHECK(c.b == 0);
    CHECK(c.a == 1);

    auto cs = CharSequence::parse("12,16,31");
    auto w = sample_witness(cs, 2);
    auto i2 = check_initial_form(w, 2);
    CHECK(i2.match);
    CHECK(i2.b == 63 - 31);
    Coeff a16 = w.root.coeff(16);
    Coeff a16_8 = 1;
    for (int i = 0; i < 8; ++i) a16_8 *= a16;
    CHECK(i2.a == 81 * a16_8);

    auto w2 = sample_witness(CharSequence::parse("10,14,15"), 2);
    auto j2 = check_initial_form(w2, 2);
    CHECK(j2.match);
    CHECK(j2.b == 71 - 15);
  }

  TEST_CASE("cusp polar is a smooth transversal line") {
    auto rep = verify_prediction(CharSequence::parse("2,3"), 1, {1, 2});
    CHECK(rep.verdict == Verdict::Pass);
    REQUIRE(rep.prediction.factors().size() == 1);
    CHECK(rep.prediction.factors()[0].char_exponents.empty());
  }

  TEST_CASE("regression classes for every order") {
    for (const char* text : {"2,3", "4,6,7", "6,9,11", "12,16,31", "10,14,15", "12,16,30,31"}) {
      auto cs = CharSequence::parse(text);
      for (Integer k = 1; k < cs.multiplicity(); ++k) {
        INFO(text << " k=" << k);
        auto rep = verify_prediction(cs, k, {1});
        CHECK(rep.verdict == Verdict::Pass);
        for (const auto& s : rep.seeds) {
          for (const auto& c : s.comparisons) {
            CHECK(c.extracted_contacts == c.predicted_contacts);
            CHECK(c.extracted_multiplicities == c.predicted_multiplicities);
            CHECK(c.aggregate_match);
          }
        }
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    auto cs = CharSequence::parse("10,14,15");
    auto a = to_json(verify_prediction(cs, 2, {5, 6})).dump();
    auto b = to_json(verify_prediction(cs, 2, {5, 6})).dump();
    CHECK(a == b);
  }

  TEST_CASE("a longer truncation never turns a pass into a failure") {
    auto cs = CharSequence::parse("12,16,31");
    for (std::int64_t extra : {0, 8, 24}) {
      VerifyOptions opt;
      opt.x_trunc = default_x_trunc(cs, 2) + extra;
      CHECK(verify_prediction(cs, 2, {1, 2}, opt).verdict == Verdict::Pass);
    }
    VerifyOptions tiny;
    tiny.x_trunc = 20;
    CHECK(verify_prediction(cs, 2, {1}, tiny).verdict != Verdict::Fail);
  }

  TEST_CASE("verdict exit codes") {
    CHECK(exit_code(Verdict::Pass) == 0);
    CHECK(exit_code(Verdict::Fail) == 2);
    CHECK(exit_code(Verdict::AllSeedsDegenerate) == 3);
    CHECK(exit_code(Verdict::Unknown) == 3);
  }
}
