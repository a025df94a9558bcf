#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqsing/charclass.hpp"
#include "eqsing/diagram.hpp"
#include "eqsing/polar.hpp"
#include "eqsing/polynomial.hpp"
#include "eqsing/puiseux.hpp"

namespace eqsing {

// An explicit branch of a class: a root alpha and its minimal polynomial.
struct WitnessBranch {
  CharSequence cs;
  PuiseuxSeries root;
  BivariatePoly f;
  std::uint64_t seed = 0;       // generator seed actually used
  std::int64_t x_trunc = 0;     // f is known modulo x^{x_trunc}
  bool sampled = true;          // false for a user-supplied root
};

// x-bound that keeps every polygon region the hat checks read inside the known part:
// bbar_h + b0 + k + 1.
std::int64_t default_x_trunc(const CharSequence& cs, std::int64_t k);

// Random root with nonzero coefficients in [-9,9] at every b_i and
// coefficients in [-9,9] (zero allowed) at the admissible intermediate
// exponents up to b_h + extra_terms. Defaults: extra_terms = b0,
// x_trunc = default_x_trunc(cs, 0).
WitnessBranch sample_witness(const CharSequence& cs, std::uint64_t seed,
                             std::optional<std::int64_t> extra_terms = std::nullopt,
                             std::optional<std::int64_t> x_trunc = std::nullopt);

// Wraps a user-supplied root (its characteristic becomes the class).
WitnessBranch witness_from_root(const PuiseuxSeries& root, std::int64_t x_trunc);

// R^{(t)} + L with R = (m_l, n_l), k = q n_l + t, and L the hat diagram of
// f without q + 1 copies of R (and without anything steeper than R).
// Throws OrderTooLarge when k >= e_{l-1}.
NewtonDiagram expected_hat_diagram(const CharSequence& cs, std::size_t l, const Integer& k,
                                   const NewtonDiagram& hat_f);

enum class CheckStatus { Pass, Degenerate, Fail, Unknown };
std::string to_string(CheckStatus s);

struct HatLevelResult {
  std::size_t l = 0;
  Integer k;
  Integer s;                         // b0 / e_{l-1}
  NewtonDiagram hat_f;               // N(f^)
  bool steep_structure = false;      // N(f^) ends with e_l copies of (m_l,n_l) at (bbar_l, 0)
  NewtonDiagram expected;
  NewtonDiagram observed;            // N(d^k f / dy^k)^
  bool certified = false;
  bool oracle_agrees = false;        // expected == symbolic_derivative(N(f^), k)
  bool contained = false;            // observed inside expected
  bool diagram_match = false;
  std::vector<Edge> steep_edges;     // observed edges steeper than m_l/n_l
  std::vector<bool> steep_squarefree;
  std::vector<Part> steep_parts;     // long parts of those edges, steepest first
  std::vector<Rational> extracted_contacts;
  Integer aggregate_observed;        // vertical length at inclination m_l/n_l
  Integer aggregate_expected;        // n_l (e_l - ceil(k / n_l))
  CheckStatus status = CheckStatus::Unknown;
  std::string note;
};

HatLevelResult check_hat_level(const WitnessBranch& w, std::size_t l, const Integer& k);

struct InitialFormResult {
  std::size_t l = 0;
  bool certified = false;
  bool match = false;
  Coeff a;
  Integer b;
  std::string expected;
  std::string observed;
};

InitialFormResult check_initial_form(const WitnessBranch& w, std::size_t l);

// Extracted steep data against the Z-factors of group l.
struct GroupComparison {
  std::size_t l = 0;
  std::vector<Part> predicted_parts;
  std::vector<Part> extracted_parts;
  std::vector<Rational> predicted_contacts;
  std::vector<Rational> extracted_contacts;
  std::vector<Integer> predicted_multiplicities;
  std::vector<Integer> extracted_multiplicities;
  Integer predicted_aggregate;       // (W of group l + groups > l) / s
  Integer observed_aggregate;
  bool parts_match = false;
  bool aggregate_match = false;
};

struct SeedReport {
  std::uint64_t seed = 0;            // requested seed
  std::uint64_t used_seed = 0;       // seed of the accepted sample
  int attempts = 0;
  std::string root;
  std::vector<HatLevelResult> levels;
  std::vector<InitialFormResult> initial_forms;
  std::vector<GroupComparison> comparisons;
  CheckStatus status = CheckStatus::Unknown;
  std::string note;
};

enum class Verdict { Pass, Fail, AllSeedsDegenerate, Unknown };
std::string to_string(Verdict v);
// 0 Pass, 2 Fail, 3 otherwise.
int exit_code(Verdict v);

struct VerifyOptions {
  std::optional<std::int64_t> extra_terms;
  std::optional<std::int64_t> x_trunc;
  int max_attempts = 8;              // samples per seed before giving up as degenerate
};

struct VerificationReport {
  CharSequence cs;
  Integer k;
  PolarPrediction prediction;
  std::vector<SeedReport> seeds;
  Verdict verdict = Verdict::Unknown;
  int degenerate_samples = 0;
};

// All checks for one fixed witness.
SeedReport verify_witness(const WitnessBranch& w, const PolarPrediction& p);

VerificationReport verify_prediction(const CharSequence& cs, const Integer& k,
                                     const std::vector<std::uint64_t>& seeds,
                                     const VerifyOptions& opt = {});

// A single explicit witness: degeneracy counts as failure.
VerificationReport verify_root(const PuiseuxSeries& root, const Integer& k,
                               std::optional<std::int64_t> x_trunc = std::nullopt);

}  // namespace eqsing
