// Command-line front end: checks, constructions, searches and dualization
// over JSON bundles, with deterministic machine-readable reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homalg/bundle.hpp"
#include "homalg/constructions.hpp"
#include "homalg/search.hpp"

using nlohmann::json;
using namespace homalg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraBundle load_bundle(const std::string& path) {
  if (path == "catalog") return catalog_bundle(FieldSpec::rationals());
  if (path.rfind("catalog:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(path.substr(8));
    } catch (const std::exception&) {
      throw UsageError("bad catalog field spec '" + path + "' (want catalog:<p>)");
    }
    return catalog_bundle(FieldSpec::prime(p));
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open bundle file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str());
}

json scalar_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue();
  return s.to_string();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(scalar_json(s));
  return a;
}

json report_json(const AxiomReport& r, const std::string& anchor, bool advisory = false) {
  json viols = json::array();
  for (const auto& v : r.violations)
    viols.push_back({{"tuple", v.tuple}, {"lhs", vec_json(v.lhs)}, {"rhs", vec_json(v.rhs)}});
  json j{{"axiom", r.axiom},
         {"anchor", anchor},
         {"pass", r.pass},
         {"checked", r.checked},
         {"violations", std::move(viols)}};
  if (advisory) j["advisory"] = true;
  return j;
}

std::string axiom_anchor(const std::string& axiom, int arity) {
  if (axiom == "skew-symmetric") return "Def. 2.3";
  if (axiom == "multiplicative") return "Def. 2.1";
  if (axiom == "hom-nambu") return "Eq. (1)";
  if (axiom == "nambu-form-eq33") return "Eq. (33)";
  if (axiom == "nambu-form-eq3") return "Eq. (3)";
  if (axiom == "nambu-form-eq2") return "Eq. (2)";
  if (axiom == "hom-associative") return "Eq. (4)";
  if (axiom == "commutative") return "Sec. 4";
  if (axiom == "hom-prelie") return "Def. 3.4";
  if (axiom == "hom-lie") return "Lemma 3.5";
  if (axiom == "hom-lie-triple") return "Def. 5.5";
  if (axiom == "centroid") return "Def. 2.4";
  if (axiom == "involution") return "Def. 4.1";
  if (axiom == "alpha-k-derivation") return "Eq. (6)";
  if (axiom == "derivation-weight") return arity == 2 ? "Eq. (7)" : "Eq. (8)";
  if (axiom == "rota-baxter") return arity == 2 ? "Eq. (5)" : "Eq. (10)";
  if (axiom == "kernel-thm1-lie") return "Theorem 3.2";
  if (axiom == "kernel-thm2-prelie") return "Theorem 3.12";
  if (axiom == "kernel-thm7-assoc") return "Theorem 3.13";
  if (axiom == "kernel-thm3-fd") return "Theorem 4.3";
  if (axiom == "kernel-cor-p2") return "Corollary 3.3";
  // Construction-hypothesis flags.
  if (axiom == "functional-annihilates-bracket") return "Lemma 3.1";
  if (axiom == "functional-twist-compatible") return "Lemma 3.1";
  if (axiom == "functional-derivation-symmetric") return "Theorem 4.3";
  if (axiom == "functional-double-symmetric") return "Eq. (22)";
  if (axiom == "identity-twist") return "Def. 2.1";
  if (axiom == "plain-derivation") return "Eq. (28)";
  if (axiom == "twist-endomorphism") return "Def. 2.1";
  if (axiom == "twisted-direct-agreement") return "Eq. (34)";
  if (axiom == "twist-commutes-with-operator") return "Theorem 5.1";
  if (axiom == "derivation-commutes-with-operator") return "Lemma 3.7";
  if (axiom == "centroid-commutes-with-operator") return "Lemma 3.11";
  if (axiom == "involution-derivation-anticommute") return "Eq. (28)";
  if (axiom == "involution-twist-commute") return "Eq. (28)";
  if (axiom == "derivation-twist-commute") return "Eq. (28)";
  if (axiom == "agrees-with-derived-bracket") return "Eq. (31)";
  if (axiom == "eq23-p-squared-condition") return "Eq. (23)";
  return "";
}

std::string construction_anchor(const std::string& name) {
  if (name == "bracket-from-functional") return "Eq. (12)";
  if (name == "bracket-from-functional-twisted") return "Eq. (34)";
  if (name == "yau-twist") return "Lemma 3.4";
  if (name == "commutator-bracket") return "Eq. (16)";
  if (name == "rb-prelie-double") return "Lemma 3.6";
  if (name == "prelie-from-derivation") return "Lemma 3.7";
  if (name == "centroid-twist") return "Lemma 3.11";
  if (name == "bracket-det-fd") return "Theorem 4.3";
  if (name == "bracket-det-omegad") return "Eq. (28)";
  if (name == "derived-bracket") return "Eq. (29)";
  if (name == "bracket-fp") return "Eq. (31)";
  if (name == "bracket-eq23") return "Eq. (23)";
  if (name == "bracket-dinv-alpha") return "Eq. (30)";
  return "";
}

struct CommonArgs {
  std::string bundle_path;
  std::string algebra, op_name, functional, axiom, construction;
  std::vector<std::string> maps;
  std::string weight;
  std::string out_path;
  bool verify = false;
  unsigned long long budget = 100000000;
  int jobs = 1;
};

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
  }
}

WeightedOperator resolve_operator(const AlgebraBundle& b, const CommonArgs& a) {
  WeightedOperator op = b.op(a.op_name);
  if (!a.weight.empty()) op.weight = Scalar::parse(b.field, a.weight);
  return op;
}

int run_check(const CommonArgs& args) {
  AlgebraBundle b = load_bundle(args.bundle_path);
  if (args.algebra.empty() || args.axiom.empty())
    throw UsageError("check needs --algebra and --axiom");
  const HomAlgebra& alg = b.algebra(args.algebra);
  const std::string& ax = args.axiom;

  auto need_op = [&]() -> WeightedOperator {
    if (args.op_name.empty()) throw UsageError("axiom '" + ax + "' needs --operator");
    return resolve_operator(b, args);
  };
  auto need_map = [&](size_t i) -> const Matrix& {
    if (args.maps.size() <= i) throw UsageError("axiom '" + ax + "' needs --map");
    return b.map(args.maps[i]);
  };

  AxiomReport r;
  if (ax == "skew-symmetric")
    r = is_skew_symmetric(alg.tensor());
  else if (ax == "multiplicative")
    r = check_multiplicative(alg);
  else if (ax == "hom-nambu")
    r = check_hom_nambu(alg);
  else if (ax == "nambu-form-eq33")
    r = check_nambu_form(alg, NambuForm::Eq33);
  else if (ax == "nambu-form-eq3")
    r = check_nambu_form(alg, NambuForm::Eq3);
  else if (ax == "nambu-form-eq2")
    r = check_nambu_form(alg, NambuForm::Eq2);
  else if (ax == "hom-associative")
    r = check_hom_associative(alg);
  else if (ax == "commutative")
    r = check_commutative(alg);
  else if (ax == "hom-prelie")
    r = check_hom_prelie(alg);
  else if (ax == "hom-lie")
    r = check_hom_lie(alg);
  else if (ax == "hom-lie-triple")
    r = check_hom_lie_triple(alg);
  else if (ax == "centroid")
    r = check_centroid(alg, need_map(0));
  else if (ax == "involution")
    r = check_involution(alg, need_map(0));
  else if (ax == "alpha-k-derivation") {
    WeightedOperator op = need_op();
    r = check_alpha_k_derivation(alg, op.matrix, op.alpha_power);
  } else if (ax == "derivation-weight")
    r = check_derivation_weight(alg, need_op());
  else if (ax == "rota-baxter")
    r = check_rota_baxter(alg, need_op());
  else if (ax.rfind("kernel-", 0) == 0) {
    KernelVariant variant;
    if (ax == "kernel-thm1-lie")
      variant = KernelVariant::Thm1Lie;
    else if (ax == "kernel-thm2-prelie")
      variant = KernelVariant::Thm2PreLie;
    else if (ax == "kernel-thm7-assoc")
      variant = KernelVariant::Thm7Assoc;
    else if (ax == "kernel-thm3-fd")
      variant = KernelVariant::Thm3fD;
    else if (ax == "kernel-cor-p2")
      variant = KernelVariant::CorP2;
    else
      throw UsageError("unknown axiom '" + ax + "'");
    if (args.functional.empty())
      throw UsageError("kernel conditions need --functional");
    std::optional<Matrix> d;
    if (variant == KernelVariant::Thm3fD) d = need_map(0);
    r = check_kernel_condition(alg, b.functional(args.functional), need_op(), variant, d);
  } else
    throw UsageError("unknown axiom '" + ax + "'");

  json doc{{"command", "check"},
           {"algebra", alg.name()},
           {"pass", r.pass},
           {"reports", json::array({report_json(r, axiom_anchor(ax, alg.arity()))})}};
  emit(doc, args.out_path);
  return r.pass ? 0 : 1;
}

int run_build(const CommonArgs& args) {
  AlgebraBundle b = load_bundle(args.bundle_path);
  if (args.algebra.empty() || args.construction.empty())
    throw UsageError("build needs --algebra and --construction");
  const HomAlgebra& alg = b.algebra(args.algebra);
  const std::string& c = args.construction;
  const bool verify = args.verify;

  auto need_f = [&]() -> const LinearFunctional& {
    if (args.functional.empty()) throw UsageError("construction '" + c + "' needs --functional");
    return b.functional(args.functional);
  };
  auto need_op = [&]() -> WeightedOperator {
    if (args.op_name.empty()) throw UsageError("construction '" + c + "' needs --operator");
    return resolve_operator(b, args);
  };
  auto need_map = [&](size_t i) -> const Matrix& {
    if (args.maps.size() <= i)
      throw UsageError("construction '" + c + "' needs " + std::to_string(i + 1) + " --map");
    return b.map(args.maps[i]);
  };

  json doc{{"command", "build"},
           {"construction", c},
           {"anchor", construction_anchor(c)},
           {"algebra", alg.name()}};
  int exit_code = 0;
  std::optional<ConstructionResult> res;
  try {
    if (c == "bracket-from-functional")
      res = bracket_from_functional(alg, need_f(), verify);
    else if (c == "bracket-from-functional-twisted")
      res = bracket_from_functional_twisted(alg, need_map(0), need_f(), verify);
    else if (c == "yau-twist")
      res = yau_twist(alg, need_map(0), verify);
    else if (c == "commutator-bracket")
      res = commutator_bracket(alg, verify);
    else if (c == "rb-prelie-double")
      res = rb_prelie_double(alg, need_op(), verify);
    else if (c == "prelie-from-derivation")
      res = prelie_from_derivation(alg, need_map(0), need_op(), verify);
    else if (c == "centroid-twist")
      res = centroid_twist(alg, need_map(0), need_op(), verify);
    else if (c == "bracket-det-fd")
      res = bracket_det_fD(alg, need_f(), need_map(0), verify);
    else if (c == "bracket-det-omegad")
      res = bracket_det_omegaD(alg, need_map(0), need_map(1), verify);
    else if (c == "derived-bracket")
      res = derived_bracket(alg, need_op(),
                            args.axiom == "hom-lie-triple" ? TernaryStructure::LieTriple
                                                           : TernaryStructure::NambuLie,
                            verify);
    else if (c == "bracket-fp")
      res = bracket_fP(alg, need_f(), need_op(), verify);
    else if (c == "bracket-eq23")
      res = bracket_eq23(alg, need_f(), need_op(), verify);
    else if (c == "bracket-dinv-alpha")
      res = bracket_dinv_alpha(alg, need_op(), verify);
    else
      throw UsageError("unknown construction '" + c + "'");
  } catch (const HypothesisFailed& hf) {
    doc["pass"] = false;
    doc["reports"] =
        json::array({report_json(hf.report, axiom_anchor(hf.report.axiom, alg.arity()))});
    std::cout << doc.dump(2) + "\n";
    return 1;
  }

  json reports = json::array();
  for (const auto& r : res->hypothesis_reports)
    reports.push_back(report_json(r, axiom_anchor(r.axiom, alg.arity())));
  bool pass = true;
  for (const auto& r : res->conclusion_reports) {
    reports.push_back(report_json(r, axiom_anchor(r.axiom, res->algebra.arity())));
    pass = pass && r.pass;
  }
  for (const auto& r : res->advisory_reports)
    reports.push_back(report_json(r, axiom_anchor(r.axiom, alg.arity()), /*advisory=*/true));
  doc["pass"] = pass;
  doc["reports"] = std::move(reports);
  doc["output"] = res->algebra.name();
  if (!pass) exit_code = 1;

  if (!args.out_path.empty()) {
    AlgebraBundle out;
    out.field = b.field;
    out.algebras.push_back(res->algebra);
    if (res->sub_adjacent) out.algebras.push_back(*res->sub_adjacent);
    std::ofstream f(args.out_path);
    if (!f) throw UsageError("cannot write '" + args.out_path + "'");
    f << serialize_bundle(out);
  }
  std::cout << doc.dump(2) + "\n";
  return exit_code;
}

int run_search(const CommonArgs& args) {
  AlgebraBundle b = load_bundle(args.bundle_path);
  if (args.algebra.empty()) throw UsageError("search needs --algebra");
  const HomAlgebra& alg = b.algebra(args.algebra);
  std::string what = args.axiom.empty() ? "rota-baxter" : args.axiom;
  Scalar weight =
      args.weight.empty() ? Scalar::zero(b.field) : Scalar::parse(b.field, args.weight);

  json doc{{"command", "search"}, {"algebra", alg.name()}, {"target", what}};
  AlgebraBundle out;
  out.field = b.field;
  if (what == "rota-baxter" || what == "derivation-weight") {
    SearchSpec spec{alg, weight,
                    what == "rota-baxter" ? OperatorKind::RotaBaxter : OperatorKind::Derivation,
                    args.budget, -1, args.jobs};
    SearchResult res =
        what == "rota-baxter" ? enumerate_rota_baxter(spec) : enumerate_weighted_derivations(spec);
    doc["anchor"] = axiom_anchor(what, alg.arity());
    doc["found"] = res.operators.size();
    doc["candidates_scanned"] = res.candidates_scanned;
    char name[16];
    for (size_t i = 0; i < res.operators.size(); ++i) {
      std::snprintf(name, sizeof name, "p%06zu", i);
      out.operators.emplace_back(name, res.operators[i]);
    }
  } else if (what == "admissible-functional") {
    FunctionalSearch fs = admissible_functionals(alg, args.budget);
    doc["anchor"] = "Lemma 3.1";
    doc["found"] = fs.exhaustive.size();
    doc["linear_basis_dim"] = fs.linear_basis.size();
    char name[16];
    for (size_t i = 0; i < fs.exhaustive.size(); ++i) {
      std::snprintf(name, sizeof name, "f%06zu", i);
      out.functionals.emplace_back(name, fs.exhaustive[i]);
    }
  } else if (what == "alpha-k-derivation") {
    std::vector<Matrix> basis = solve_linear_derivations(alg, 0);
    doc["anchor"] = "Eq. (6)";
    doc["found"] = basis.size();
    char name[16];
    for (size_t i = 0; i < basis.size(); ++i) {
      std::snprintf(name, sizeof name, "d%06zu", i);
      out.operators.emplace_back(
          name, WeightedOperator{basis[i], Scalar::zero(b.field),
                                 OperatorKind::AlphaKDerivation, 0});
    }
  } else
    throw UsageError("unknown search target '" + what + "'");

  doc["pass"] = true;
  std::cout << doc.dump(2) + "\n";
  if (!args.out_path.empty()) {
    std::ofstream f(args.out_path);
    if (!f) throw UsageError("cannot write '" + args.out_path + "'");
    f << serialize_bundle(out);
  }
  return 0;
}

int run_dualize(const CommonArgs& args) {
  AlgebraBundle b = load_bundle(args.bundle_path);
  if (args.algebra.empty() || args.op_name.empty())
    throw UsageError("dualize needs --algebra and --operator");
  const HomAlgebra& alg = b.algebra(args.algebra);
  WeightedOperator op = resolve_operator(b, args);
  DualizeDirection dir = op.kind == OperatorKind::RotaBaxter ? DualizeDirection::RBtoDiff
                                                             : DualizeDirection::DiffToRB;
  WeightedOperator dual = dualize(alg, op, dir);

  json doc{{"command", "dualize"},
           {"anchor", "Theorem 2.9"},
           {"algebra", alg.name()},
           {"operator", args.op_name},
           {"direction", dir == DualizeDirection::RBtoDiff ? "rb-to-diff" : "diff-to-rb"},
           {"pass", true}};
  std::cout << doc.dump(2) + "\n";
  if (!args.out_path.empty()) {
    AlgebraBundle out;
    out.field = b.field;
    out.operators.emplace_back(args.op_name + ".dual", dual);
    std::ofstream f(args.out_path);
    if (!f) throw UsageError("cannot write '" + args.out_path + "'");
    f << serialize_bundle(out);
  }
  return 0;
}

int run_catalog(const std::string& field_arg, const std::string& out_path) {
  FieldSpec f = FieldSpec::rationals();
  if (!field_arg.empty() && field_arg != "Q") {
    try {
      f = FieldSpec::prime(std::stol(field_arg));
    } catch (const std::exception&) {
      throw UsageError("bad catalog field '" + field_arg + "' (want Q or a prime)");
    }
  }
  AlgebraBundle b = catalog_bundle(f);
  std::cout << "field " << f.to_string() << "\n";
  for (const auto& a : b.algebras)
    std::cout << "algebra " << a.name() << " dim=" << a.dim() << " arity=" << a.arity() << "\n";
  for (const auto& [name, op] : b.operators) {
    (void)op;
    std::cout << "operator " << name << "\n";
  }
  for (const auto& [name, fn] : b.functionals) {
    (void)fn;
    std::cout << "functional " << name << "\n";
  }
  for (const auto& [name, m] : b.maps) {
    (void)m;
    std::cout << "map " << name << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << serialize_bundle(b);
  }
  return 0;
}

int run_report(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open report file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("bad report document: ") + e.what());
  }
  bool pass = doc.value("pass", false);
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc.value("command", "?") << ": " << (pass ? "pass" : "FAIL") << "\n";
    for (const auto& r : doc.value("reports", json::array())) {
      std::cout << "  " << r.value("axiom", "?") << " [" << r.value("anchor", "")
                << "]: " << (r.value("pass", false) ? "pass" : "FAIL") << " ("
                << r.value("checked", 0) << " tuples checked";
      if (r.value("advisory", false)) std::cout << ", advisory";
      std::cout << ")\n";
      for (const auto& v : r.value("violations", json::array()))
        std::cout << "    violation at tuple " << v.value("tuple", json::array()).dump()
                  << ": lhs " << v.value("lhs", json::array()).dump() << " != rhs "
                  << v.value("rhs", json::array()).dump() << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker and builder for Rota-Baxter ternary Hom-algebras"};
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&](CLI::App* sub, bool bundle_positional = true) {
    if (bundle_positional)
      sub->add_option("bundle", args.bundle_path,
                      "bundle file, 'catalog', or 'catalog:<p>'")
          ->required();
    sub->add_option("--algebra", args.algebra, "algebra name in the bundle");
    sub->add_option("--operator", args.op_name, "operator name in the bundle");
    sub->add_option("--functional", args.functional, "functional name in the bundle");
    sub->add_option("--map", args.maps, "auxiliary map name (repeatable)");
    sub->add_option("--weight", args.weight, "override the operator weight");
    sub->add_option("-o,--output", args.out_path, "write the output document here");
  };

  CLI::App* check = app.add_subcommand("check", "run one axiom checker");
  add_common(check);
  check->add_option("--axiom", args.axiom, "axiom name (kebab-case)")->required();

  CLI::App* build = app.add_subcommand("build", "run a construction");
  add_common(build);
  build->add_option("--construction", args.construction, "construction name")->required();
  build->add_option("--axiom", args.axiom, "declared structure for derived-bracket");
  build->add_flag("--verify", args.verify, "re-check the theorem's conclusion");

  CLI::App* search = app.add_subcommand("search", "enumerate operators or functionals");
  add_common(search);
  search->add_option("--axiom", args.axiom,
                     "rota-baxter | derivation-weight | admissible-functional | "
                     "alpha-k-derivation");
  search->add_option("--budget", args.budget, "max candidates scanned");
  search->add_option("--jobs", args.jobs, "worker threads");

  CLI::App* dual = app.add_subcommand("dualize", "apply the invertible-operator duality");
  add_common(dual);

  std::string catalog_field, catalog_out;
  CLI::App* cat = app.add_subcommand("catalog", "list the shipped examples");
  cat->add_option("field", catalog_field, "Q (default) or a prime p");
  cat->add_option("-o,--output", catalog_out, "write the catalog bundle here");

  std::string report_path, report_format = "text";
  CLI::App* rep = app.add_subcommand("report", "render a saved report document");
  rep->add_option("report_file", report_path, "report produced by check/build with -o")
      ->required();
  rep->add_option("--format", report_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(args);
    if (build->parsed()) return run_build(args);
    if (search->parsed()) return run_search(args);
    if (dual->parsed()) return run_dualize(args);
    if (cat->parsed()) return run_catalog(catalog_field, catalog_out);
    if (rep->parsed()) return run_report(report_path, report_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
