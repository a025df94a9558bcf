#include <doctest.h>

#include "unity.hpp"

TEST_SUITE("roots_of_unity") {
  TEST_CASE("product over U_E of (t - c eps^b) equals (t^n - c^n)^e") {
    int cases = 0;
    for (unity::C c : {unity::C(0.8, -0.35), unity::C(0.6, 0.7), unity::C(-0.5, 0.0)}) {
      unity::for_each_level(24, [&](int E, int e, int b) {
        INFO("E=" << E << " e=" << e << " b=" << b);
        CHECK(unity::binomial_error(E, e, b, c) < 1e-9);
        ++cases;
      });
    }
    CHECK(cases > 300);
  }

  TEST_CASE("product over U_E minus U_e of (1 - eps^b) equals n^e") {
    unity::for_each_level(24, [](int E, int e, int b) {
      INFO("E=" << E << " e=" << e << " b=" << b);
      CHECK(unity::norm_error(E, e, b) < 1e-9);
    });
  }

  TEST_CASE("sum over U_n of eps^i") {
    for (int n = 1; n <= 24; ++n) {
      for (int i = -30; i <= 60; ++i) CHECK(unity::sum_error(n, i) < 1e-9);
    }
  }
}
