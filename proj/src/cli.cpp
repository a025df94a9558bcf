#include "eqsing/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqsing/error.hpp"
#include "eqsing/report.hpp"

namespace eqsing {

namespace {

struct Options {
  std::string format;
  std::string output;
  bool quiet = false;

  // predict / example / verify
  std::string chars;
  std::string example;
  std::int64_t k = 0;
  bool no_branch = false;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::optional<std::int64_t> trunc_extra;
  std::optional<std::int64_t> x_trunc;
  int max_attempts = 8;
  std::string root;

  // diagram
  std::string elementary;
  std::string vertices;
  bool long_form = false;
  std::size_t split = 1;

  // contfrac
  std::string value;
  bool even = false;

  // minpoly
  std::int64_t derivative = 0;
};

std::pair<Integer, Integer> parse_pair(const std::string& text) {
  auto pos = text.find_first_of("/,");
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "expected m/n, got '" + text + "'");
  return {parse_integer(text.substr(0, pos)), parse_integer(text.substr(pos + 1))};
}

NewtonDiagram diagram_input(const Options& o) {
  if (!o.elementary.empty() && !o.vertices.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either --elementary or --vertices");
  }
  if (!o.elementary.empty()) {
    auto [m, n] = parse_pair(o.elementary);
    return NewtonDiagram::elementary(m, n);
  }
  if (o.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "--elementary or --vertices required");
  std::vector<LatticePoint> pts;
  std::stringstream ss(o.vertices);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto [x, y] = parse_pair(item);
    pts.push_back({x, y});
  }
  return from_support(pts);
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw Error(ErrorCode::InvalidArgument, "format '" + f + "' not available for this command");
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string render_prediction(const PolarPrediction& p, const Options& o, const std::string& title) {
  require_format(o.format, {"text", "json", "dot"});
  if (o.format == "json") {
    Json j = to_json(p);
    j["eggers_wall"] = to_json(export_eggers_wall(p, !o.no_branch));
    return json_text(j);
  }
  if (o.format == "dot") return to_dot(export_eggers_wall(p, !o.no_branch), title);
  return text_report(p, o.quiet);
}

int emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(o.output);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.output);
  f << text;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const char* env = std::getenv("EQSING_FORMAT");
  o.format = env && *env ? env : "text";

  CLI::App app{"Generic higher-order polars of plane branches"};
  app.name("eqsing");
  app.require_subcommand(1);
  app.set_version_flag("--version", "eqsing 0.1.0");
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json, dot or svg (default $EQSING_FORMAT or text)")
        ->check(CLI::IsMember({"text", "json", "dot", "svg"}));
    sub->add_option("-o,--output", o.output, "write to a file instead of stdout");
    sub->add_flag("-q,--quiet", o.quiet, "suppress banner lines in text output");
  };

  auto* predict_cmd = app.add_subcommand("predict", "factorization data of the generic k-th polar");
  common(predict_cmd);
  predict_cmd->add_option("characteristic", o.chars, "characteristic b0,b1,...,bh");
  predict_cmd->add_option("--char", o.chars, "characteristic b0,b1,...,bh");
  predict_cmd->add_option("--k", o.k, "derivative order")->required();
  predict_cmd->add_flag("--no-branch", o.no_branch, "leave f and its semiroots out of the tree");

  auto* example_cmd = app.add_subcommand("example", "the two worked classes (12,16,31) and (10,14,15)");
  common(example_cmd);
  example_cmd->add_option("name", o.example, "ex1 or ex2")->required()->check(CLI::IsMember({"ex1", "ex2"}));
  example_cmd->add_option("--k", o.k, "derivative order")->required();
  example_cmd->add_flag("--no-branch", o.no_branch, "leave f and its semiroots out of the tree");

  auto* verify_cmd = app.add_subcommand("verify", "check the prediction on sampled branches");
  common(verify_cmd);
  verify_cmd->add_option("characteristic", o.chars, "characteristic b0,b1,...,bh");
  verify_cmd->add_option("--char", o.chars, "characteristic b0,b1,...,bh");
  verify_cmd->add_option("--k", o.k, "derivative order")->required();
  verify_cmd->add_option("--seeds", o.seeds, "comma separated seeds")->delimiter(',');
  verify_cmd->add_option("--trunc-extra", o.trunc_extra, "terms sampled past b_h (default b0)");
  verify_cmd->add_option("--x-trunc", o.x_trunc, "x-bound of the minimal polynomial");
  verify_cmd->add_option("--max-attempts", o.max_attempts, "samples per seed before giving up (default 8)");
  verify_cmd->add_option("--root", o.root, "explicit root such as \"x^(4/3)+x^2+x^(31/12)\"");

  auto* diagram_cmd = app.add_subcommand("diagram", "Newton diagram operations");
  diagram_cmd->require_subcommand(1);
  auto diagram_sub = [&](const char* name, const char* help) {
    auto* s = diagram_cmd->add_subcommand(name, help);
    common(s);
    s->add_option("--elementary", o.elementary, "elementary diagram m/n");
    s->add_option("--vertices", o.vertices, "support points \"x,y;x,y;...\"");
    s->add_flag("--long", o.long_form, "long canonical representation");
    return s;
  };
  auto* derive_cmd = diagram_sub("derive", "symbolic k-th derivative");
  derive_cmd->add_option("--k", o.k, "derivative order")->required();
  auto* canonical_cmd = diagram_sub("canonical", "canonical representation");
  auto* closed_cmd = diagram_sub("closed-form", "first derivative of (m,n) from its continued fraction");
  auto* split_cmd = diagram_sub("split", "R^(k) and L after the first s long parts");
  split_cmd->add_option("--k", o.k, "derivative order")->required();
  split_cmd->add_option("--s", o.split, "number of steep long parts in R");

  auto* cf_cmd = app.add_subcommand("contfrac", "continued fraction of m/n with convergents");
  common(cf_cmd);
  cf_cmd->add_option("value", o.value, "m/n with m > n > 0")->required();
  cf_cmd->add_flag("--even", o.even, "rewrite to an even number of steps");

  auto* mp_cmd = app.add_subcommand("minpoly", "minimal polynomial of a Puiseux root");
  common(mp_cmd);
  mp_cmd->add_option("--root", o.root, "root such as \"x^(3/2)\"")->required();
  mp_cmd->add_option("--x-trunc", o.x_trunc, "x-bound (default: exact)");
  mp_cmd->add_option("--derivative", o.derivative, "differentiate k times in y");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (predict_cmd->parsed() || example_cmd->parsed()) {
      std::string title;
      if (example_cmd->parsed()) {
        o.chars = o.example == "ex1" ? "12,16,31" : "10,14,15";
        title = o.example;
      }
      if (o.chars.empty()) throw Error(ErrorCode::InvalidArgument, "characteristic required");
      CharSequence cs = CharSequence::parse(o.chars);
      if (title.empty()) title = "K(" + cs.to_string() + ")";
      title += ", k = " + std::to_string(o.k);
      return emit(render_prediction(predict(cs, o.k), o, title), o, out);
    }
    if (verify_cmd->parsed()) {
      require_format(o.format, {"text", "json"});
      auto run = [&]() -> VerificationReport {
        if (!o.root.empty()) {
          VerificationReport r = verify_root(PuiseuxSeries::parse(o.root), o.k, o.x_trunc);
          if (!o.chars.empty() && !(CharSequence::parse(o.chars) == r.cs)) {
            throw Error(ErrorCode::InvalidArgument, "root has characteristic " + r.cs.to_string());
          }
          return r;
        }
        if (o.chars.empty()) throw Error(ErrorCode::InvalidArgument, "--char or --root required");
        VerifyOptions vo{o.trunc_extra, o.x_trunc, o.max_attempts};
        return verify_prediction(CharSequence::parse(o.chars), o.k, o.seeds, vo);
      };
      VerificationReport r = run();
      emit(o.format == "json" ? json_text(to_json(r)) : text_report(r, o.quiet), o, out);
      return exit_code(r.verdict);
    }
    if (diagram_cmd->parsed()) {
      NewtonDiagram d = diagram_input(o);
      if (closed_cmd->parsed()) {
        require_format(o.format, {"text", "json"});
        auto [m, n] = parse_pair(o.elementary);
        CanonicalRep rep = elementary_derivative_closed_form(m, n);
        return emit(o.format == "json" ? json_text(to_json(rep)) : rep_text(rep) + "\n", o, out);
      }
      if (split_cmd->parsed()) {
        require_format(o.format, {"text", "json"});
        auto [r, l] = split_derivative(d, o.k, o.split);
        if (o.format == "json") {
          return emit(json_text({{"R_derivative", to_json(canonical_rep(r, o.long_form))},
                                 {"L", to_json(canonical_rep(l, o.long_form))}}),
                      o, out);
        }
        return emit("R^(" + std::to_string(o.k) + ") = " + rep_text(canonical_rep(r, o.long_form)) +
                        "\nL = " + rep_text(canonical_rep(l, o.long_form)) + "\n",
                    o, out);
      }
      require_format(o.format, {"text", "json", "svg"});
      NewtonDiagram target = derive_cmd->parsed() ? symbolic_derivative(d, o.k) : d;
      CanonicalRep rep = canonical_rep(target, o.long_form);
      if (o.format == "svg") return emit(to_svg(target), o, out);
      if (o.format == "json") {
        Json j = to_json(target);
        j["canonical"] = to_json(rep);
        return emit(json_text(j), o, out);
      }
      std::string text = rep_text(rep) + "\n";
      if (!o.quiet && canonical_cmd->parsed()) text += "vertices " + vertices_text(target) + "\n";
      return emit(text, o, out);
    }
    if (cf_cmd->parsed()) {
      require_format(o.format, {"text", "json"});
      auto [m, n] = parse_pair(o.value);
      ContinuedFraction cf = ContinuedFraction::expand(m, n);
      if (o.even) cf = cf.to_even_length();
      return emit(o.format == "json" ? json_text(to_json(cf)) : text_report(cf, o.quiet), o, out);
    }
    if (mp_cmd->parsed()) {
      require_format(o.format, {"text", "json"});
      PuiseuxSeries root = PuiseuxSeries::parse(o.root).reduce();
      std::int64_t X = o.x_trunc.value_or(root.is_zero() ? 1 : root.terms().rbegin()->first + 1);
      BivariatePoly f = min_poly(root, X);
      if (o.derivative) f = derivative_y(f, o.derivative);
      return emit(o.format == "json" ? json_text(to_json(f)) : f.to_string() + "\n", o, out);
    }
  } catch (const Error& e) {
    if (o.format == "json") {
      err << Json{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}}.dump()
          << "\n";
    } else {
      err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    }
    return 1;
  }
  return 1;
}

}  // namespace eqsing
