#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "magsq/casestudies.hpp"
#include "magsq/catalog.hpp"
#include "magsq/clifford.hpp"
#include "magsq/errors.hpp"
#include "magsq/finitegrp.hpp"
#include "magsq/json_io.hpp"
#include "magsq/quatmat.hpp"
#include "magsq/tolerances.hpp"

namespace magsq::cli {
namespace {

QuadraticForm parse_signature(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw InvalidInput("signature must look like p,q (e.g. --signature 3,0)");
  try {
    std::size_t used_p = 0, used_q = 0;
    const int p = std::stoi(s.substr(0, comma), &used_p);
    const int q = std::stoi(s.substr(comma + 1), &used_q);
    if (used_p != comma || used_q != s.size() - comma - 1)
      throw InvalidInput("signature must look like p,q");
    return QuadraticForm(p, q);
  } catch (const std::logic_error&) {
    throw InvalidInput("signature must look like p,q");
  }
}

PinVariant parse_variant(const std::string& s) {
  if (s == "abs") return PinVariant::Abs;
  if (s == "scharlau") return PinVariant::Scharlau;
  if (s == "big") return PinVariant::Big;
  throw InvalidInput("variant must be abs, scharlau or big");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Vec> vectors_from_file(const std::string& path) {
  const Json j = parse_json(read_file(path));
  if (!j.is_array() || j.empty())
    throw InvalidInput("expected a nonempty JSON array of vectors in " + path);
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(vec_from_json(row));
  return out;
}

std::vector<Mat2C> mat2c_list_from_file(const std::string& path) {
  const Json j = parse_json(read_file(path));
  if (!j.is_array() || j.empty())
    throw InvalidInput("expected a nonempty JSON array of matrices in " + path);
  std::vector<Mat2C> out;
  for (const auto& m : j) out.push_back(mat2c_from_json(m));
  return out;
}

std::vector<RealMatrix> mat3r_list_from_file(const std::string& path) {
  const Json j = parse_json(read_file(path));
  if (!j.is_array() || j.empty())
    throw InvalidInput("expected a nonempty JSON array of matrices in " + path);
  std::vector<RealMatrix> out;
  for (const auto& m : j) out.push_back(real_matrix_from_json(m));
  return out;
}

// Reports signal failure through their ok field; arrays fail if any entry does.
int exit_code_for(const Json& j) {
  const auto failed = [](const Json& e) {
    return e.is_object() && e.contains("ok") && e["ok"].is_boolean() &&
           !e["ok"].get<bool>();
  };
  if (j.is_array())
    return std::any_of(j.begin(), j.end(), failed) ? 1 : 0;
  return failed(j) ? 1 : 0;
}

void emit(const Json& j, const std::string& output_path, std::ostream& out) {
  std::string text = j.dump(2);
  text += '\n';
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  f << text;
  if (!f) throw InvalidInput("cannot write output file: " + output_path);
}

struct Options {
  // Flags shared across subcommands.
  double tolerance = kEqTol;
  bool tolerance_given = false;  // flag or MAGIC_TOLERANCE present
  std::uint64_t seed = 0;
  std::size_t cap = kClosureCap;
  std::string output;

  // Per-subcommand inputs (only the active subcommand's fields are read).
  std::string signature;
  std::string lhs, rhs, element, map, kind, variant, matrix, mirror, vector;
  std::string ambient, generators, group, roots;
  bool spin = false;
  bool all = false;

  // Grid tolerance for closure enumeration: kGridTol unless overridden.
  double grid_tol() const { return tolerance_given ? tolerance : kGridTol; }
};

Json run_product(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  const Multivector lhs = multivector_from_json(parse_json(o.lhs), form);
  const Multivector rhs = multivector_from_json(parse_json(o.rhs), form);
  return to_json(lhs * rhs);
}

Json run_involute(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  const Multivector x = multivector_from_json(parse_json(o.element), form);
  if (o.map == "grade") return to_json(x.grade_involution());
  if (o.map == "reverse") return to_json(x.reversion());
  if (o.map == "conjugate") return to_json(x.conjugation());
  throw InvalidInput("--map must be grade, reverse or conjugate");
}

Json run_norm(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  const Multivector x = multivector_from_json(parse_json(o.element), form);
  if (o.kind == "conjugation") return to_json(conjugation_norm(x));
  if (o.kind == "reversion") return to_json(reversion_norm(x));
  throw InvalidInput("--kind must be conjugation or reversion");
}

Json run_pin(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  const Multivector x = multivector_from_json(parse_json(o.element), form);
  const PinVariant variant = parse_variant(o.variant);
  const bool member = o.spin ? spin_membership(x, variant, o.tolerance)
                             : pin_membership(x, variant, o.tolerance);
  return Json{{"member", member}};
}

Json run_rho(const Options& o) {
  const Mat2C m = mat2c_from_json(parse_json(o.matrix));
  return to_json(rho_tilde(m, o.tolerance));
}

Json run_reflect(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  const Vec mirror = vec_from_json(parse_json(o.mirror));
  if (o.vector.empty()) return to_json(form.reflection_matrix(mirror));
  return to_json(form.reflect(mirror, vec_from_json(parse_json(o.vector))));
}

Json run_center(const Options& o) {
  const QuadraticForm form = parse_signature(o.signature);
  Json basis = Json::array();
  for (const auto& x : graded_center_basis(form)) basis.push_back(to_json(x));
  return basis;
}

template <class M>
Json closure_report(const std::vector<M>& generators, const Options& o) {
  try {
    const auto g = closure(generators, o.cap, o.grid_tol());
    Json elements = Json::array();
    for (const auto& m : g.elements) elements.push_back(to_json(m));
    return Json{{"ok", true},
                {"ambient", o.ambient},
                {"order", g.order()},
                {"elements", elements}};
  } catch (const NotFiniteWithinCap& e) {
    return Json{{"ok", false}, {"ambient", o.ambient}, {"cap", o.cap}, {"error", e.what()}};
  }
}

Json run_closure(const Options& o) {
  if (o.ambient == "mat2c") return closure_report(mat2c_list_from_file(o.generators), o);
  if (o.ambient == "mat3r") return closure_report(mat3r_list_from_file(o.generators), o);
  throw InvalidInput("--ambient must be mat2c or mat3r");
}

Json run_verify_square(const Options& o) {
  std::vector<Vec> roots;
  std::string name;
  if (!o.group.empty()) {
    const auto g = parse_reflection_group_name(o.group);
    roots = builtin_roots(g);
    name = to_string(g);
  } else if (!o.roots.empty()) {
    roots = vectors_from_file(o.roots);
    name = "custom";
  } else {
    throw InvalidInput("verify-square needs --group or --roots");
  }
  try {
    return to_json(verify_magic_square(roots, name, o.cap, o.grid_tol()));
  } catch (const NotFiniteWithinCap& e) {
    return Json{{"ok", false}, {"group", name}, {"error", e.what()}};
  }
}

Json run_witt(const Options& o) {
  std::vector<Mat2C> generators;
  std::string name;
  if (!o.group.empty()) {
    const auto g = parse_binary_group_name(o.group);
    generators = builtin_binary_generators(g);
    name = to_string(g);
  } else if (!o.generators.empty()) {
    generators = mat2c_list_from_file(o.generators);
    name = "custom";
  } else {
    throw InvalidInput("witt needs --group or --generators");
  }
  try {
    const auto g = closure(generators, o.cap, o.grid_tol());
    const WittReport report = witt_root_check(g, o.grid_tol());
    return Json{{"ok", report.ok},
                {"group", name},
                {"element_count", report.element_count},
                {"root_system", to_json(report.roots)}};
  } catch (const NotFiniteWithinCap& e) {
    return Json{{"ok", false}, {"group", name}, {"error", e.what()}};
  }
}

Json run_case_study(const Options& o) {
  if (o.all) {
    Json reports = Json::array();
    for (const auto& r : all_case_studies(o.seed, o.tolerance))
      reports.push_back(to_json(r));
    return reports;
  }
  if (o.signature.empty())
    throw InvalidInput("case-study needs --signature or --all");
  const QuadraticForm form = parse_signature(o.signature);
  return to_json(case_study(form.positive_count(), form.negative_count(),
                            o.seed, o.tolerance));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;

  if (const char* env = std::getenv("MAGIC_TOLERANCE")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      err << "error: MAGIC_TOLERANCE must be a positive number\n";
      return 2;
    }
    o.tolerance = value;
    o.tolerance_given = true;
  }

  CLI::App app{"Clifford algebras, Pin/Spin membership, the twisted adjoint "
               "onto O(3), and finite-group closure verifiers",
               "magsq"};
  app.require_subcommand(1);
  auto* tol_opt =
      app.add_option("--tolerance", o.tolerance,
                     "Equality tolerance (also settable via MAGIC_TOLERANCE)");
  app.add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--cap", o.cap, "Closure size cap")->capture_default_str();
  app.add_option("-o,--output", o.output, "Write JSON to a file instead of stdout");

  const auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* product = sub("product", "Geometric product of two multivectors");
  product->add_option("--signature", o.signature, "Form signature p,q")->required();
  product->add_option("--lhs", o.lhs, "Left factor (multivector JSON)")->required();
  product->add_option("--rhs", o.rhs, "Right factor (multivector JSON)")->required();

  CLI::App* involute = sub("involute", "Apply an involution to a multivector");
  involute->add_option("--signature", o.signature, "Form signature p,q")->required();
  involute->add_option("--element", o.element, "Multivector JSON")->required();
  involute->add_option("--map", o.map, "grade | reverse | conjugate")->required();

  CLI::App* norm = sub("norm", "Norm of a multivector");
  norm->add_option("--signature", o.signature, "Form signature p,q")->required();
  norm->add_option("--element", o.element, "Multivector JSON")->required();
  norm->add_option("--kind", o.kind, "conjugation (conj(x)x) | reversion (rev(x)x)")
      ->default_val("conjugation");

  CLI::App* pin = sub("pin", "Pin / Spin group membership");
  pin->add_option("--signature", o.signature, "Form signature p,q")->required();
  pin->add_option("--element", o.element, "Multivector JSON")->required();
  pin->add_option("--variant", o.variant, "abs | scharlau | big")->required();
  pin->add_flag("--spin", o.spin, "Check Spin (even part) instead of Pin");

  CLI::App* rho = sub("rho", "Twisted adjoint of a unimodular unitary as a 3x3 matrix");
  rho->add_option("--matrix", o.matrix, "2x2 complex matrix JSON")->required();

  CLI::App* reflect = sub("reflect", "Reflection across a mirror vector");
  reflect->add_option("--signature", o.signature, "Form signature p,q")->required();
  reflect->add_option("--mirror", o.mirror, "Mirror vector JSON")->required();
  reflect->add_option("--vector", o.vector,
                      "Vector to reflect (omit to print the reflection matrix)");

  CLI::App* closure_cmd = sub("closure", "Finite product closure of matrix generators");
  closure_cmd->add_option("--ambient", o.ambient, "mat2c | mat3r")->required();
  closure_cmd->add_option("--generators", o.generators, "JSON file with an array of matrices")
      ->required();

  CLI::App* verify_square = sub("verify-square",
                                "Verify the reflection-group / binary-group square");
  auto* vs_group = verify_square->add_option("--group", o.group, "a1 | a1x3 | a3 | b3 | h3");
  verify_square->add_option("--roots", o.roots, "JSON file with an array of mirror roots")
      ->excludes(vs_group);

  CLI::App* witt = sub("witt", "Root-system check for a finite subgroup of SU(2)");
  auto* witt_group = witt->add_option("--group", o.group, "q8 | 2t | 2o | 2i");
  witt->add_option("--generators", o.generators, "JSON file with an array of 2x2 matrices")
      ->excludes(witt_group);

  CLI::App* case_study_cmd = sub("case-study", "Pin/Spin kernel tables for one signature");
  auto* cs_sig = case_study_cmd->add_option(
      "--signature", o.signature, "One of 0,1 1,0 0,2 2,0 3,0 0,3");
  case_study_cmd->add_flag("--all", o.all, "Run every supported signature")
      ->excludes(cs_sig);

  CLI::App* center = sub("center", "Basis of the graded center of Cl(p,q)");
  center->add_option("--signature", o.signature, "Form signature p,q")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (tol_opt->count() > 0) o.tolerance_given = true;

  try {
    Json result;
    if (product->parsed()) result = run_product(o);
    else if (involute->parsed()) result = run_involute(o);
    else if (norm->parsed()) result = run_norm(o);
    else if (pin->parsed()) result = run_pin(o);
    else if (rho->parsed()) result = run_rho(o);
    else if (reflect->parsed()) result = run_reflect(o);
    else if (closure_cmd->parsed()) result = run_closure(o);
    else if (verify_square->parsed()) result = run_verify_square(o);
    else if (witt->parsed()) result = run_witt(o);
    else if (case_study_cmd->parsed()) result = run_case_study(o);
    else if (center->parsed()) result = run_center(o);
    else {
      err << "error: no subcommand\n";
      return 2;
    }
    emit(result, o.output, out);
    return exit_code_for(result);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace magsq::cli
