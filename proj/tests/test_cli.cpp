#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "eqsing/cli.hpp"

using namespace eqsing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("diagram commands") {
    CHECK(run({"diagram", "derive", "--elementary", "12/5", "--k", "2", "--format", "text"}).out == "(3,1)+(5,2)\n");
    CHECK(run({"diagram", "derive", "--elementary", "12/5", "--k", "1"}).out == "(10,4)\n");
    CHECK(run({"diagram", "derive", "--elementary", "12/5", "--k", "1", "--long"}).out == "2(5,2)\n");
    CHECK(run({"diagram", "closed-form", "--elementary", "31/4"}).out == "3(8,1)\n");
    CHECK(run({"diagram", "canonical", "--vertices", "0,10;8,4;18,0", "--long", "-q"}).out == "2(5,2)+2(4,3)\n");
    auto svg = run({"diagram", "derive", "--elementary", "12/5", "--k", "2", "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
  }

  TEST_CASE("predict text matches the worked bullets") {
    auto r = run({"predict", "--char", "12,16,31", "--k", "1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cont(f_1, z^(1)_1) = 3/2 and Char(z^(1)_1) = {3/2}") != std::string::npos);
    CHECK(r.out.find("cont(f_2, z^(2)_3) = 8/3 and Char(z^(2)_3) = {4/3}") != std::string::npos);
    auto pos = run({"predict", "12,16,31", "--k", "1"});
    CHECK(pos.out == r.out);
  }

  TEST_CASE("formats and environment default") {
    setenv("EQSING_FORMAT", "json", 1);
    auto j = run({"predict", "--char", "4,6,7", "--k", "1"});
    unsetenv("EQSING_FORMAT");
    CHECK(j.out.rfind("{", 0) == 0);
    auto d = run({"example", "ex2", "--k", "1", "--format", "dot"});
    CHECK(d.out.rfind("digraph", 0) == 0);
    CHECK(run({"contfrac", "31/4", "--format", "svg"}).code == 1);
  }

  TEST_CASE("errors and exit codes") {
    auto bad = run({"predict", "--char", "12,16,30", "--k", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error: TrailingGcdNotOne:", 0) == 0);
    CHECK(run({"predict", "--char", "12,16,31", "--k", "12"}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"verify", "--char", "10,14,15", "--k", "2", "--seeds", "1,2"}).code == 0);
    CHECK(run({"verify", "--root", "x^(4/3)+x^2+x^(31/12)", "--k", "10"}).code == 2);
    CHECK(run({"minpoly", "--root", "x^(3/2)"}).out == "y^2 - x^3\n");
  }
}
