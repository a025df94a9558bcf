#pragma once

#include <string>

#include <json.hpp>

#include "eqsing/charclass.hpp"
#include "eqsing/contfrac.hpp"
#include "eqsing/diagram.hpp"
#include "eqsing/polar.hpp"
#include "eqsing/polynomial.hpp"
#include "eqsing/verify.hpp"

namespace eqsing {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
Json json_integer(const Integer& v);
Json json_rational(const Rational& r);

Json to_json(const CharSequence& cs);
Json to_json(const ContinuedFraction& cf);
Json to_json(const NewtonDiagram& d);
Json to_json(const CanonicalRep& rep);
Json to_json(const BivariatePoly& f);
Json to_json(const PolarPrediction& p);
Json to_json(const EggersWallTree& t);
Json to_json(const VerificationReport& r);

// "(3,1)+(5,2)", repeated long parts grouped as "3(8,1)".
std::string rep_text(const CanonicalRep& rep);
std::string vertices_text(const NewtonDiagram& d);
std::string char_text(const std::vector<Rational>& chars);

std::string text_report(const ContinuedFraction& cf, bool quiet);
std::string text_report(const PolarPrediction& p, bool quiet);
std::string text_report(const VerificationReport& r, bool quiet);

std::string to_dot(const EggersWallTree& t, const std::string& title);
std::string to_svg(const NewtonDiagram& d);

}  // namespace eqsing
