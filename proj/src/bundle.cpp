#include "homalg/bundle.hpp"

#include <json.hpp>

namespace homalg {

using nlohmann::json;

namespace {

template <typename T>
const T& find_named(const std::vector<std::pair<std::string, T>>& items, const std::string& name,
                    const char* kind) {
  for (const auto& [n, v] : items)
    if (n == name) return v;
  throw BundleError(std::string("no ") + kind + " named '" + name + "' in bundle");
}

FieldSpec parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (j.is_object() && j.contains("Fp")) {
    if (!j["Fp"].is_number_integer()) throw BundleError("Fp modulus must be an integer");
    long p = j["Fp"].get<long>();
    if (!is_prime(p)) throw BundleError("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec::prime(p);
  }
  throw BundleError("field must be \"Q\" or {\"Fp\": p}");
}

Scalar parse_coeff(const FieldSpec& f, const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
  } catch (const std::exception& e) {
    throw BundleError(std::string("bad coefficient: ") + e.what());
  }
  throw BundleError("coefficient must be a string or integer");
}

json coeff_to_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue();
  return s.to_string();
}

Matrix parse_matrix(const FieldSpec& f, const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw BundleError(std::string(what) + " must be a row array");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols, f);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw BundleError(std::string(what) + " has ragged rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_coeff(f, j[r][c]);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(coeff_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

HomAlgebra parse_algebra(const FieldSpec& f, const json& j) {
  for (const char* key : {"name", "dim", "arity", "twist", "bracket"})
    if (!j.contains(key)) throw BundleError(std::string("algebra entry missing '") + key + "'");
  int dim = j["dim"].get<int>();
  int arity = j["arity"].get<int>();
  StructureTensor t(dim, arity, f);  // validates dim/arity bounds
  for (const auto& entry : j["bracket"]) {
    if (!entry.contains("args") || !entry.contains("value"))
      throw BundleError("bracket entry needs 'args' and 'value'");
    IndexTuple args = entry["args"].get<IndexTuple>();
    Vec value = zero_vec(f, dim);
    for (const auto& [key, coeff] : entry["value"].items()) {
      int idx = 0;
      try {
        idx = std::stoi(key);
      } catch (const std::exception&) {
        throw BundleError("bracket value key '" + key + "' is not a basis index");
      }
      if (idx < 1 || idx > dim)
        throw BundleError("bracket value index " + key + " out of [1, dim]");
      value[static_cast<size_t>(idx - 1)] = parse_coeff(f, coeff);
    }
    t.set(args, value);
  }
  if (j.value("skew_complete", false)) t = skew_symmetrize(t);
  Matrix twist = parse_matrix(f, j["twist"], "twist");
  return HomAlgebra(std::move(t), std::move(twist), j["name"].get<std::string>());
}

json algebra_to_json(const HomAlgebra& a) {
  json entries = json::array();
  for (const auto& [tuple, coeff] : a.tensor().table()) {
    json value = json::object();
    for (int i = 0; i < a.dim(); ++i)
      if (!coeff[static_cast<size_t>(i)].is_zero())
        value[std::to_string(i + 1)] = coeff_to_json(coeff[static_cast<size_t>(i)]);
    entries.push_back({{"args", tuple}, {"value", std::move(value)}});
  }
  return {{"name", a.name()},   {"dim", a.dim()},           {"arity", a.arity()},
          {"twist", matrix_to_json(a.twist())}, {"bracket", std::move(entries)},
          {"skew_complete", false}};
}

OperatorKind parse_kind(const json& j, int& alpha_power) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "rota-baxter") return OperatorKind::RotaBaxter;
    if (s == "derivation") return OperatorKind::Derivation;
    throw BundleError("unknown operator kind '" + s + "'");
  }
  if (j.is_object() && j.contains("alpha-k")) {
    alpha_power = j["alpha-k"].get<int>();
    if (alpha_power < 0) throw BundleError("alpha-k power must be non-negative");
    return OperatorKind::AlphaKDerivation;
  }
  throw BundleError("operator kind must be a string or {\"alpha-k\": k}");
}

json kind_to_json(const WeightedOperator& op) {
  switch (op.kind) {
    case OperatorKind::RotaBaxter: return "rota-baxter";
    case OperatorKind::Derivation: return "derivation";
    case OperatorKind::AlphaKDerivation: return json{{"alpha-k", op.alpha_power}};
  }
  throw BundleError("unknown operator kind");
}

template <typename T>
void check_unique(const std::vector<std::pair<std::string, T>>& items, const char* kind) {
  for (size_t i = 0; i < items.size(); ++i)
    for (size_t j = i + 1; j < items.size(); ++j)
      if (items[i].first == items[j].first)
        throw BundleError(std::string("duplicate ") + kind + " name '" + items[i].first + "'");
}

}  // namespace

const HomAlgebra& AlgebraBundle::algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name() == name) return a;
  throw BundleError("no algebra named '" + name + "' in bundle");
}

const WeightedOperator& AlgebraBundle::op(const std::string& name) const {
  return find_named(operators, name, "operator");
}

const LinearFunctional& AlgebraBundle::functional(const std::string& name) const {
  return find_named(functionals, name, "functional");
}

const Matrix& AlgebraBundle::map(const std::string& name) const {
  return find_named(maps, name, "map");
}

AlgebraBundle parse_bundle(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw BundleError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw BundleError("bundle must be a JSON object");
  AlgebraBundle b;
  b.field = j.contains("field") ? parse_field(j["field"]) : FieldSpec::rationals();
  try {
    for (const auto& a : j.value("algebras", json::array()))
      b.algebras.push_back(parse_algebra(b.field, a));
    for (const auto& o : j.value("operators", json::array())) {
      int alpha_power = 0;
      OperatorKind kind = o.contains("kind") ? parse_kind(o["kind"], alpha_power)
                                             : OperatorKind::RotaBaxter;
      Scalar weight = o.contains("weight") ? parse_coeff(b.field, o["weight"])
                                           : Scalar::zero(b.field);
      b.operators.emplace_back(
          o.at("name").get<std::string>(),
          WeightedOperator{parse_matrix(b.field, o.at("matrix"), "operator matrix"), weight,
                           kind, alpha_power});
    }
    for (const auto& fj : j.value("functionals", json::array())) {
      Vec cov;
      for (const auto& c : fj.at("covector")) cov.push_back(parse_coeff(b.field, c));
      b.functionals.emplace_back(fj.at("name").get<std::string>(),
                                 LinearFunctional{b.field, std::move(cov)});
    }
    for (const auto& mj : j.value("maps", json::array()))
      b.maps.emplace_back(mj.at("name").get<std::string>(),
                          parse_matrix(b.field, mj.at("matrix"), "map matrix"));
  } catch (const json::exception& e) {
    throw BundleError(std::string("malformed bundle: ") + e.what());
  }
  check_unique(b.operators, "operator");
  check_unique(b.functionals, "functional");
  check_unique(b.maps, "map");
  for (size_t i = 0; i < b.algebras.size(); ++i)
    for (size_t k = i + 1; k < b.algebras.size(); ++k)
      if (b.algebras[i].name() == b.algebras[k].name())
        throw BundleError("duplicate algebra name '" + b.algebras[i].name() + "'");
  return b;
}

std::string serialize_bundle(const AlgebraBundle& b) {
  json j;
  j["field"] = b.field.is_rational() ? json("Q") : json{{"Fp", b.field.p()}};
  json algebras = json::array();
  for (const auto& a : b.algebras) algebras.push_back(algebra_to_json(a));
  j["algebras"] = std::move(algebras);
  json ops = json::array();
  for (const auto& [name, op] : b.operators)
    ops.push_back({{"name", name},
                   {"matrix", matrix_to_json(op.matrix)},
                   {"weight", coeff_to_json(op.weight)},
                   {"kind", kind_to_json(op)}});
  j["operators"] = std::move(ops);
  json fns = json::array();
  for (const auto& [name, f] : b.functionals) {
    json cov = json::array();
    for (const auto& c : f.covector) cov.push_back(coeff_to_json(c));
    fns.push_back({{"name", name}, {"covector", std::move(cov)}});
  }
  j["functionals"] = std::move(fns);
  json maps = json::array();
  for (const auto& [name, m] : b.maps)
    maps.push_back({{"name", name}, {"matrix", matrix_to_json(m)}});
  j["maps"] = std::move(maps);
  return j.dump(2) + "\n";
}

AlgebraBundle catalog_bundle(const FieldSpec& f) {
  AlgebraBundle b;
  b.field = f;
  auto abelian = [&](const std::string& name, int dim, int arity) {
    b.algebras.emplace_back(StructureTensor(dim, arity, f), Matrix::identity(dim, f), name);
  };
  abelian("abelian_2_2", 2, 2);
  abelian("abelian_3_2", 3, 2);
  abelian("abelian_3_3", 3, 3);
  abelian("abelian_4_3", 4, 3);

  // Heisenberg: [e1,e2] = e3.
  {
    StructureTensor t(3, 2, f);
    t.set({1, 2}, basis_vec(f, 3, 3));
    b.algebras.emplace_back(skew_symmetrize(t), Matrix::identity(3, f), "H3");
  }
  // Affine plus center: [e1,e2] = e2, e3 central.
  {
    StructureTensor t(3, 2, f);
    t.set({1, 2}, basis_vec(f, 3, 2));
    b.algebras.emplace_back(skew_symmetrize(t), Matrix::identity(3, f), "AFF2C");
  }
  // Ternary: [e1,e2,e3] = e4.
  {
    StructureTensor t(4, 3, f);
    t.set({1, 2, 3}, basis_vec(f, 4, 4));
    b.algebras.emplace_back(skew_symmetrize(t), Matrix::identity(4, f), "N4");
  }
  // Truncated polynomials K[t]/(t^4), basis 1, t, t^2, t^3.
  {
    StructureTensor t(4, 2, f);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (i + j - 1 <= 4) t.set({i, j}, basis_vec(f, 4, i + j - 1));
    b.algebras.emplace_back(std::move(t), Matrix::identity(4, f), "T4");
  }

  // t^2 d/dt and t d/dt on T4 (plain d/dt does not descend to K[t]/(t^4)
  // outside characteristic 2), multiplication by t, and the sign involution.
  Matrix sq_ddt = Matrix::zero(4, 4, f);
  sq_ddt.at(2, 1) = Scalar::one(f);
  sq_ddt.at(3, 2) = Scalar::of(f, 2);
  b.operators.emplace_back(
      "t4_sq_ddt", WeightedOperator{sq_ddt, Scalar::zero(f), OperatorKind::Derivation, 0});
  Matrix euler = Matrix::zero(4, 4, f);
  for (int i = 0; i < 4; ++i) euler.at(i, i) = Scalar::of(f, i);
  b.operators.emplace_back("t4_euler",
                           WeightedOperator{euler, Scalar::zero(f), OperatorKind::Derivation, 0});
  b.operators.emplace_back(
      "zero3", WeightedOperator{Matrix::zero(3, 3, f), Scalar::zero(f), OperatorKind::RotaBaxter, 0});
  b.operators.emplace_back(
      "zero4", WeightedOperator{Matrix::zero(4, 4, f), Scalar::zero(f), OperatorKind::RotaBaxter, 0});

  Matrix mult_t = Matrix::zero(4, 4, f);
  for (int i = 0; i < 3; ++i) mult_t.at(i + 1, i) = Scalar::one(f);
  b.maps.emplace_back("t4_mult_t", std::move(mult_t));
  Matrix omega = Matrix::identity(4, f);
  omega.at(1, 1) = -Scalar::one(f);
  omega.at(3, 3) = -Scalar::one(f);
  b.maps.emplace_back("t4_omega", std::move(omega));

  b.functionals.emplace_back("h3_f1", LinearFunctional{f, basis_vec(f, 3, 1)});
  b.functionals.emplace_back("aff2c_f3", LinearFunctional{f, basis_vec(f, 3, 3)});
  return b;
}

}  // namespace homalg
