#include <doctest.h>

#include "eqsing/contfrac.hpp"
#include "eqsing/error.hpp"

using namespace eqsing;

namespace {

// Evaluate [h0; h1, ..., hs] bottom-up.
Rational evaluate(const std::vector<Integer>& h) {
  Rational v(h.back());
  for (std::size_t i = h.size() - 1; i-- > 0;) v = Rational(h[i]) + 1 / v;
  return v;
}

}  // namespace

TEST_SUITE("contfrac") {
  TEST_CASE("expansions and convergents") {
    auto a = ContinuedFraction::expand(12, 5);
    CHECK(a.quotients() == std::vector<Integer>{2, 2, 2});
    CHECK(Rational(a.p(0), a.q(0)) == Rational(2, 1));
    CHECK(Rational(a.p(1), a.q(1)) == Rational(5, 2));
    CHECK(Rational(a.p(2), a.q(2)) == Rational(12, 5));

    auto b = ContinuedFraction::expand(31, 4);
    CHECK(b.quotients() == std::vector<Integer>{7, 1, 3});
    CHECK(b.p(1) == 8);
    CHECK(b.q(1) == 1);

    auto c = ContinuedFraction::expand(9, 1);
    CHECK(c.quotients() == std::vector<Integer>{9});
    CHECK(c.length() == 0);
  }

  TEST_CASE("even length rewrite") {
    CHECK(ContinuedFraction::expand(31, 4).to_even_length().quotients() == std::vector<Integer>{7, 1, 3});
    CHECK(ContinuedFraction::from_quotients({7, 1, 3, 2}).to_even_length().quotients() ==
          std::vector<Integer>{7, 1, 3, 1, 1});
    CHECK(ContinuedFraction::expand(12, 5).to_even_length().quotients() == std::vector<Integer>{2, 2, 2});
    auto c = ContinuedFraction::expand(15, 2);
    CHECK(c.quotients() == std::vector<Integer>{7, 2});
    CHECK(c.to_even_length().quotients() == std::vector<Integer>{7, 1, 1});
    CHECK(c.to_even_length().value() == Rational(15, 2));
  }

  TEST_CASE("range errors") {
    CHECK_THROWS_AS(ContinuedFraction::expand(3, 5), Error);
    CHECK_THROWS_AS(ContinuedFraction::expand(5, 0), Error);
    CHECK_THROWS_AS(ContinuedFraction::from_quotients({1, 0}), Error);
  }

  TEST_CASE("interleaving and value on all pairs up to 120") {
    for (int m = 2; m <= 120; ++m) {
      for (int n = 1; n < m; ++n) {
        auto cf = ContinuedFraction::expand(m, n);
        Rational target(m, n);
        CHECK(evaluate(cf.quotients()) == target);
        CHECK(cf.value() == target);
        CHECK(cf.to_even_length().value() == target);
        CHECK(cf.to_even_length().length() % 2 == 0);
        for (std::size_t i = 0; i <= cf.length(); ++i) {
          Rational c(cf.p(i), cf.q(i));
          if (i % 2 == 0) {
            CHECK(c <= target);
            if (i >= 2) CHECK(Rational(cf.p(i - 2), cf.q(i - 2)) < c);
          } else {
            CHECK(c >= target);
            if (i >= 3) CHECK(Rational(cf.p(i - 2), cf.q(i - 2)) > c);
          }
          // p_i q_{i-1} - p_{i-1} q_i = (-1)^{i+1}
          Integer det = cf.p(i) * cf.q(i - 1) - cf.p(i - 1) * cf.q(i);
          CHECK(det == (i % 2 == 0 ? -1 : 1));
        }
      }
    }
  }
}
