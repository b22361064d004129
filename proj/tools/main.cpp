// comdec: exact verification of A = Z(A) + [A,A] and its polynomial-image
// variants on finite-dimensional algebras given by structure constants.
//
// Exit codes: 0 the checked property holds (or the computation succeeded),
// 1 the property fails or a bounded search exhausted its budget, 2 malformed
// or semantically invalid input. With --json every command prints a single
// report object; fixed seeds and one worker make the bytes reproducible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comdec/algebra.hpp"
#include "comdec/commutator.hpp"
#include "comdec/error.hpp"
#include "comdec/freepoly.hpp"
#include "comdec/io.hpp"
#include "comdec/linalg.hpp"
#include "comdec/quaternion.hpp"
#include "comdec/rng.hpp"
#include "comdec/subfield.hpp"
#include "comdec/twisted.hpp"

namespace {

using namespace comdec;

struct Run {
  Json results = Json::object();
  std::vector<std::string> lines;  // human-readable report
  std::uint64_t seed = 0;
  int code = 0;
};

std::string vec_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string mat_str(const Mat& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += " ";
    out += vec_str(m.row(r));
  }
  return "[" + out + "]";
}

Field field_from_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      long long p = std::stoll(s.substr(3), &used);
      if (used == s.size() - 3) return Field::prime(p);
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("--field: expected Q or Fp:<p>, got '" + s + "'");
}

AlgebraPtr load_algebra(const std::string& file) {
  return parse_algebra_spec(load_json_file(file));
}

Element load_element(const AlgebraPtr& a, const std::string& file) {
  return parse_element(a, load_json_file(file));
}

NcPoly load_poly(const std::string& file) { return parse_poly(load_json_file(file)); }

void report_subspace(const char* name, const Subspace& s, Run& r) {
  r.results = Json{{"dim", s.dim()}, {"subspace", subspace_to_json(s)}};
  r.lines.push_back(std::string(name) + ": dim " + std::to_string(s.dim()));
  for (int i = 0; i < s.dim(); ++i) r.lines.push_back("  " + vec_str(s.basis_vector(i)));
}

Json decomposition_to_json(const DecompositionReport& d) {
  return Json{{"holds", d.holds},
              {"dim_center", d.dim_center},
              {"dim_commutator", d.dim_commutator},
              {"dim_sum", d.dim_sum},
              {"dim_intersection", d.dim_intersection}};
}

std::string decomposition_str(const DecompositionReport& d) {
  return std::string(d.holds ? "holds" : "fails") + " (center " + std::to_string(d.dim_center) +
         ", commutators " + std::to_string(d.dim_commutator) + ", sum " +
         std::to_string(d.dim_sum) + ", intersection " + std::to_string(d.dim_intersection) + ")";
}

void cmd_validate(const std::string& algebra_file, Run& r) {
  try {
    AlgebraPtr a = load_algebra(algebra_file);
    r.results = Json{{"ok", true}, {"dim", a->dim()}, {"field", field_to_json(a->field())}};
    r.lines.push_back("valid: dim " + std::to_string(a->dim()) + " over " +
                      a->field().to_string());
  } catch (const InvalidParams& e) {
    r.results = Json{{"ok", false}, {"violation", e.what()}};
    r.lines.push_back(std::string("invalid: ") + e.what());
    r.code = 1;
  }
}

void cmd_center(const std::string& algebra_file, Run& r) {
  report_subspace("center", load_algebra(algebra_file)->center(), r);
}

void cmd_commutators(const std::string& algebra_file, Run& r) {
  report_subspace("commutator subspace", load_algebra(algebra_file)->commutator_subspace(), r);
}

void cmd_radical(const std::string& algebra_file, Run& r) {
  report_subspace("radical", load_algebra(algebra_file)->jacobson_radical_char0(), r);
}

// --construct needs the algebra to be M_n(F) on the standard matrix-unit
// basis; the element is then reshaped and split as lambda I + [x, y].
void cmd_decompose(const std::string& algebra_file, bool construct,
                   const std::string& element_file, Run& r) {
  AlgebraPtr a = load_algebra(algebra_file);
  if (!construct) {
    DecompositionReport d = a->check_decomposition();
    r.results = decomposition_to_json(d);
    r.lines.push_back("A = Z(A) + [A,A]: " + decomposition_str(d));
    r.code = d.holds ? 0 : 1;
    return;
  }

  if (element_file.empty()) throw SchemaError("decompose --construct needs --element");
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(a->dim()))));
  if (n * n != a->dim() || a->table() != build_matrix_algebra(a->field(), n)->table())
    throw InvalidParams("decompose --construct expects a full matrix algebra M_n(F)");
  Element x = load_element(a, element_file);
  Mat m(a->field(), n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) m.at(row, col) = x.coord(row * n + col);

  CentralSplit split = central_plus_commutator(m);
  Mat resum = Mat::identity(a->field(), n).scaled(split.lambda) +
              (split.x * split.y - split.y * split.x);
  if (resum != m) throw Error("constructive split failed to re-sum");  // unreachable
  r.results = Json{{"lambda", scalar_to_json(split.lambda)},
                   {"x", matrix_to_json(split.x)},
                   {"y", matrix_to_json(split.y)},
                   {"holds", true}};
  r.lines.push_back("a = lambda I + (x y - y x) with lambda = " + split.lambda.to_string());
  r.lines.push_back("  x = " + mat_str(split.x));
  r.lines.push_back("  y = " + mat_str(split.y));
}

void cmd_quat_classify(const std::string& a_str, const std::string& b_str,
                       const std::string& field_spec, bool char2, std::int64_t bound,
                       int workers, Run& r) {
  Field f = field_from_flag(field_spec);
  bool char2_field = f.finite() && f.modulus() == 2;
  if (char2 && !char2_field)
    throw SchemaError("--char2: the selected field does not have characteristic 2");
  Scalar a = Scalar::parse(f, a_str);
  Scalar b = Scalar::parse(f, b_str);
  QuaternionAlgebra qa(f, a, b);
  SplitClassification cls = classify_split(qa, bound, workers);

  Json obstructions = Json::array();
  for (const Place& v : cls.obstructions) obstructions.push_back(v.to_string());
  Json certificate;
  if (cls.certificate.has_value())
    certificate = Json{{"q", element_to_json(cls.certificate->q)},
                       {"r", element_to_json(cls.certificate->r)}};
  r.results = Json{{"a", scalar_to_json(a)},
                   {"b", scalar_to_json(b)},
                   {"field", field_to_json(f)},
                   {"verdict", cls.verdict == SplitVerdict::Division ? "Division" : "Split"},
                   {"obstructions", obstructions},
                   {"certificate", certificate}};

  std::string head = "(" + a.to_string() + ", " + b.to_string() + ") over " + f.to_string() +
                     ": " +
                     (cls.verdict == SplitVerdict::Division ? "Division" : "Split");
  r.lines.push_back(head);
  for (const Place& v : cls.obstructions)
    r.lines.push_back("  Hilbert symbol -1 at " + v.to_string());
  if (cls.certificate.has_value()) {
    r.lines.push_back("  zero divisor q = " + vec_str(cls.certificate->q.coords()));
    r.lines.push_back("  zero divisor r = " + vec_str(cls.certificate->r.coords()));
  }
}

void cmd_twisted_audit(const std::string& group_file, const std::string& tau_file,
                       const std::string& field_spec, Run& r) {
  Field f = field_from_flag(field_spec);
  FiniteGroup g = parse_group(load_json_file(group_file));
  g.require_valid();
  TwistingFunction tau = parse_cocycle(g, f, load_json_file(tau_file));
  tau.require_valid();
  auto alg = build_twisted_group_algebra(g, tau);
  ValidationReport v = alg->validate();
  if (!v.ok) throw InvalidParams(v.violations.front().message);

  CommutatorCentralReport audit = audit_commutator_central(alg);
  Subspace radical = alg->jacobson_radical_char0();
  DecompositionReport dec = alg->check_decomposition();
  bool pass = !audit.corollary_violated && radical.dim() == 0 && dec.holds;

  r.results = Json{{"order", g.order()},
                   {"hypothesis_holds", audit.hypothesis_holds},
                   {"commutative", audit.commutative},
                   {"corollary_violated", audit.corollary_violated},
                   {"radical_dim", radical.dim()},
                   {"decomposition", decomposition_to_json(dec)},
                   {"pass", pass}};
  r.lines.push_back("twisted group algebra of order " + std::to_string(g.order()) + " over " +
                    f.to_string());
  r.lines.push_back(std::string("  commutators central: ") +
                    (audit.hypothesis_holds ? "yes" : "no"));
  r.lines.push_back(std::string("  commutative: ") + (audit.commutative ? "yes" : "no"));
  r.lines.push_back(std::string("  corollary violated: ") +
                    (audit.corollary_violated ? "YES" : "no"));
  r.lines.push_back("  radical: dim " + std::to_string(radical.dim()));
  r.lines.push_back("  A = Z(A) + [A,A]: " + decomposition_str(dec));
  r.code = pass ? 0 : 1;
}

void cmd_poly_classify(const std::string& poly_file, const std::string& algebra_file, int trials,
                       std::uint64_t seed, Run& r) {
  NcPoly f = load_poly(poly_file);
  AlgebraPtr a = load_algebra(algebra_file);
  ClassificationReport rep = classify_identity_central(f, a, trials, seed);
  r.seed = seed;
  r.results = Json{{"verdict", poly_class_name(rep.verdict)},
                   {"randomized", rep.randomized},
                   {"trials", rep.trials}};
  std::string note = rep.randomized
                         ? " (randomized, " + std::to_string(rep.trials) + " trials)"
                         : " (deterministic)";
  r.lines.push_back("classification: " + poly_class_name(rep.verdict) + note);
}

void cmd_poly_eval(const std::string& poly_file, const std::string& algebra_file,
                   const std::vector<std::string>& element_files, Run& r) {
  NcPoly f = load_poly(poly_file);
  AlgebraPtr a = load_algebra(algebra_file);
  std::vector<Element> args;
  args.reserve(element_files.size());
  for (const std::string& file : element_files) args.push_back(load_element(a, file));
  Element value = evaluate_poly(f, a, args);
  r.results = Json{{"value", element_to_json(value)}};
  r.lines.push_back("value: " + vec_str(value.coords()));
}

void cmd_poly_image_span(const std::string& poly_file, const std::string& algebra_file,
                         std::uint64_t seed, Run& r) {
  NcPoly f = load_poly(poly_file);
  AlgebraPtr a = load_algebra(algebra_file);
  SpanDecompositionReport rep = check_span_decomposition(f, a, seed);
  r.seed = seed;
  r.results = Json{{"classification", poly_class_name(rep.classification)},
                   {"holds", rep.holds},
                   {"hypothesis_met", rep.hypothesis_met},
                   {"infinite_center_required", rep.infinite_center_required},
                   {"dim_center", rep.dim_center},
                   {"dim_span", rep.dim_span},
                   {"dim_sum", rep.dim_sum},
                   {"dim_algebra", rep.dim_algebra}};
  r.lines.push_back("A = Z(A) + span f(A): " + std::string(rep.holds ? "holds" : "fails") +
                    " (center " + std::to_string(rep.dim_center) + ", span " +
                    std::to_string(rep.dim_span) + ", sum " + std::to_string(rep.dim_sum) +
                    " of " + std::to_string(rep.dim_algebra) + ")");
  r.lines.push_back("f is " + poly_class_name(rep.classification));
  if (!rep.hypothesis_met)
    r.lines.push_back("hypothesis failure: the span decomposition needs a non-central, "
                      "non-identity f" +
                      std::string(rep.infinite_center_required ? " and an infinite center" : ""));
  r.code = rep.holds ? 0 : 1;
}

void cmd_poly_minpoly(const std::string& algebra_file, const std::string& element_file, Run& r) {
  AlgebraPtr a = load_algebra(algebra_file);
  Element x = load_element(a, element_file);
  std::vector<Scalar> mp = minimal_polynomial(a->regular_representation(x));
  Json coeffs = Json::array();
  for (const Scalar& c : mp) coeffs.push_back(scalar_to_json(c));
  r.results = Json{{"degree", static_cast<int>(mp.size()) - 1}, {"coeffs", coeffs}};
  r.lines.push_back("minimal polynomial: " + poly_to_string(mp));
}

void cmd_gn_test(const std::string& algebra_file, const std::string& element_file, int n,
                 int trials, std::uint64_t seed, Run& r) {
  AlgebraPtr a = load_algebra(algebra_file);
  Element x = load_element(a, element_file);
  Rng rng(seed);
  AlgebraicityReport rep = algebraicity_test(x, n, trials, rng);
  r.seed = seed;
  r.results = Json{{"n", rep.n},
                   {"minpoly_degree", rep.minpoly_degree},
                   {"trials", rep.trials},
                   {"gn_vanished_all", rep.gn_vanished_all},
                   {"consistent", rep.consistent},
                   {"conclusive", rep.conclusive}};
  r.lines.push_back("g_" + std::to_string(rep.n) + " sampled " + std::to_string(rep.trials) +
                    " times: " + (rep.gn_vanished_all ? "all vanished" : "nonzero witness"));
  r.lines.push_back("minimal polynomial degree: " + std::to_string(rep.minpoly_degree));
  r.lines.push_back(std::string("consistent: ") + (rep.consistent ? "yes" : "NO") +
                    (rep.conclusive ? " (conclusive)" : " (sampling only)"));
  r.code = rep.consistent ? 0 : 1;
}

void cmd_maxsubfield_search(const std::string& algebra_file, const std::string& poly_file,
                            std::uint64_t seed, long budget, Run& r) {
  Json aj = load_json_file(algebra_file);
  if (!aj.is_object() || !aj.contains("quaternion"))
    throw InvalidParams("maxsubfield search expects a quaternion algebra spec");
  AlgebraPtr resolved = parse_algebra_spec(aj);  // full schema + table validation
  Field f = resolved->field();
  Scalar a = parse_scalar(f, aj["quaternion"].contains("a") ? aj["quaternion"]["a"] : Json(),
                          "$.quaternion.a");
  Scalar b = parse_scalar(f, aj["quaternion"].contains("b") ? aj["quaternion"]["b"] : Json(),
                          "$.quaternion.b");
  QuaternionAlgebra qa(f, a, b);
  NcPoly poly = load_poly(poly_file);

  GeneratingSearchReport rep = search_generating_image(qa, poly, seed, budget);
  r.seed = seed;
  Json witness;
  if (rep.found) {
    Json args = Json::array();
    for (const Element& e : rep.witness->args) args.push_back(element_to_json(e));
    witness = Json{{"args", args},
                   {"alpha", element_to_json(rep.witness->alpha)},
                   {"gamma", element_to_json(rep.witness->gamma)},
                   {"conjugate", element_to_json(rep.witness->conjugate)}};
  }
  r.results = Json{{"found", rep.found},
                   {"verdict", rep.found ? "Found" : "Exhausted"},
                   {"tuples_tried", rep.tuples_tried},
                   {"gammas_tried", rep.gammas_tried},
                   {"witness", witness}};
  if (rep.found) {
    r.lines.push_back("witness after " + std::to_string(rep.tuples_tried) + " tuples, " +
                      std::to_string(rep.gammas_tried) + " conjugators");
    r.lines.push_back("  alpha = " + vec_str(rep.witness->alpha.coords()));
    r.lines.push_back("  gamma = " + vec_str(rep.witness->gamma.coords()));
    r.lines.push_back("  gamma alpha gamma^-1 = " + vec_str(rep.witness->conjugate.coords()));
  } else {
    r.lines.push_back("exhausted budget " + std::to_string(budget) + " (tuples " +
                      std::to_string(rep.tuples_tried) + ", conjugators " +
                      std::to_string(rep.gammas_tried) + ")");
  }
  r.code = rep.found ? 0 : 1;
}

std::string echo_args(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += " ";
    echo += argv[i];
  }
  return echo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact central + commutator decompositions of finite-dimensional algebras"};
  app.require_subcommand(1);

  std::string algebra_file, poly_file, element_file, group_file, tau_file;
  std::vector<std::string> element_files;
  std::string field_spec = "Q";
  std::string a_str, b_str;
  std::uint64_t seed = 1;
  int trials = 200;
  int gn_trials = 50;
  int n = 0;
  long budget = 10000;
  std::int64_t bound = 10;
  int workers = 1;
  bool construct = false;
  bool char2 = false;
  bool json_out = false;

  Run run;
  std::function<void()> handler;

  auto leaf = [&](CLI::App* cmd, std::function<void()> fn) {
    cmd->add_flag("--json", json_out, "machine-readable report");
    cmd->callback([&handler, fn] { handler = fn; });
  };

  CLI::App* validate = app.add_subcommand("validate", "check the structure-constant axioms");
  validate->add_option("--algebra", algebra_file, "algebra spec file")->required();
  leaf(validate, [&] { cmd_validate(algebra_file, run); });

  CLI::App* center = app.add_subcommand("center", "basis of Z(A)");
  center->add_option("--algebra", algebra_file, "algebra spec file")->required();
  leaf(center, [&] { cmd_center(algebra_file, run); });

  CLI::App* commutators = app.add_subcommand("commutators", "basis of [A,A]");
  commutators->add_option("--algebra", algebra_file, "algebra spec file")->required();
  leaf(commutators, [&] { cmd_commutators(algebra_file, run); });

  CLI::App* decompose = app.add_subcommand("decompose", "check A = Z(A) + [A,A]");
  decompose->add_option("--algebra", algebra_file, "algebra spec file")->required();
  decompose->add_flag("--construct", construct, "split a matrix-algebra element explicitly");
  decompose->add_option("--element", element_file, "element file for --construct");
  leaf(decompose, [&] { cmd_decompose(algebra_file, construct, element_file, run); });

  CLI::App* radical = app.add_subcommand("radical", "Jacobson radical (characteristic 0)");
  radical->add_option("--algebra", algebra_file, "algebra spec file")->required();
  leaf(radical, [&] { cmd_radical(algebra_file, run); });

  CLI::App* quat = app.add_subcommand("quat", "quaternion algebras");
  quat->require_subcommand(1);
  CLI::App* classify = quat->add_subcommand("classify", "division or split");
  classify->add_option("-a", a_str, "first parameter")->required();
  classify->add_option("-b", b_str, "second parameter")->required();
  classify->add_flag("--char2", char2, "characteristic-2 form");
  classify->add_option("--field", field_spec, "Q or Fp:<p>");
  classify->add_option("--bound", bound, "zero-divisor search bound");
  classify->add_option("--workers", workers, "parallel search workers");
  leaf(classify, [&] {
    cmd_quat_classify(a_str, b_str, field_spec, char2, bound, workers, run);
  });

  CLI::App* twisted = app.add_subcommand("twisted", "twisted group algebras");
  twisted->require_subcommand(1);
  CLI::App* audit = twisted->add_subcommand("audit", "commutator-centrality audit");
  audit->add_option("--group", group_file, "group file")->required();
  audit->add_option("--tau", tau_file, "twisting function file")->required();
  audit->add_option("--field", field_spec, "Q or Fp:<p>");
  leaf(audit, [&] { cmd_twisted_audit(group_file, tau_file, field_spec, run); });

  CLI::App* poly = app.add_subcommand("poly", "free noncommutative polynomials");
  poly->require_subcommand(1);

  CLI::App* pclassify = poly->add_subcommand("classify", "identity / central / neither");
  pclassify->add_option("--poly", poly_file, "polynomial file")->required();
  pclassify->add_option("--algebra", algebra_file, "algebra spec file")->required();
  pclassify->add_option("--trials", trials, "finite-field sample count");
  pclassify->add_option("--seed", seed, "random seed");
  leaf(pclassify, [&] { cmd_poly_classify(poly_file, algebra_file, trials, seed, run); });

  CLI::App* peval = poly->add_subcommand("eval", "evaluate at elements");
  peval->add_option("--poly", poly_file, "polynomial file")->required();
  peval->add_option("--algebra", algebra_file, "algebra spec file")->required();
  peval->add_option("--element", element_files, "element files, one per variable");
  leaf(peval, [&] { cmd_poly_eval(poly_file, algebra_file, element_files, run); });

  CLI::App* pspan = poly->add_subcommand("image-span", "check A = Z(A) + span f(A)");
  pspan->add_option("--poly", poly_file, "polynomial file")->required();
  pspan->add_option("--algebra", algebra_file, "algebra spec file")->required();
  pspan->add_option("--seed", seed, "random seed");
  leaf(pspan, [&] { cmd_poly_image_span(poly_file, algebra_file, seed, run); });

  CLI::App* pminpoly = poly->add_subcommand("minpoly", "minimal polynomial of an element");
  pminpoly->add_option("--algebra", algebra_file, "algebra spec file")->required();
  pminpoly->add_option("--element", element_file, "element file")->required();
  leaf(pminpoly, [&] { cmd_poly_minpoly(algebra_file, element_file, run); });

  auto add_gn_options = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra_file, "algebra spec file")->required();
    cmd->add_option("--element", element_file, "element file")->required();
    cmd->add_option("--n", n, "degree bound to test")->required();
    cmd->add_option("--trials", gn_trials, "sampled argument tuples");
    cmd->add_option("--seed", seed, "random seed");
    leaf(cmd, [&] { cmd_gn_test(algebra_file, element_file, n, gn_trials, seed, run); });
  };
  add_gn_options(app.add_subcommand("gn-test", "degree bound vs g_n vanishing"));
  add_gn_options(poly->add_subcommand("gn-test", "degree bound vs g_n vanishing"));

  CLI::App* maxsubfield = app.add_subcommand("maxsubfield", "maximal subfields");
  maxsubfield->require_subcommand(1);
  CLI::App* search = maxsubfield->add_subcommand("search", "generating witness for span f(D)");
  search->add_option("--algebra", algebra_file, "quaternion algebra spec file")->required();
  search->add_option("--poly", poly_file, "polynomial file")->required();
  search->add_option("--seed", seed, "random seed");
  search->add_option("--budget", budget, "total sample budget");
  leaf(search, [&] { cmd_maxsubfield_search(algebra_file, poly_file, seed, budget, run); });

  std::string echo = echo_args(argc, argv);
  bool saw_json = std::find(argv + 1, argv + argc, std::string("--json")) != argv + argc;

  try {
    app.parse(argc, argv);
    if (handler) handler();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const comdec::Error& e) {
    run.results = Json{{"error", e.what()}};
    run.code = 2;
    if (saw_json) {
      Json report{{"command", echo}, {"seed", run.seed}, {"results", run.results},
                  {"exit_code", run.code}};
      std::cout << report.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return run.code;
  }

  if (json_out) {
    Json report{{"command", echo}, {"seed", run.seed}, {"results", run.results},
                {"exit_code", run.code}};
    std::cout << report.dump(2) << "\n";
  } else {
    for (const std::string& line : run.lines) std::cout << line << "\n";
  }
  return run.code;
}
