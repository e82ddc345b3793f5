#pragma once

#include <utility>

#include "homalg/tensor.hpp"

namespace homalg {

struct BundleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named collection of algebras, operators, functionals and auxiliary maps
/// sharing one coefficient field; mirrors the JSON bundle file.
struct AlgebraBundle {
  FieldSpec field = FieldSpec::rationals();
  std::vector<HomAlgebra> algebras;
  std::vector<std::pair<std::string, WeightedOperator>> operators;
  std::vector<std::pair<std::string, LinearFunctional>> functionals;
  std::vector<std::pair<std::string, Matrix>> maps;

  const HomAlgebra& algebra(const std::string& name) const;
  const WeightedOperator& op(const std::string& name) const;
  const LinearFunctional& functional(const std::string& name) const;
  const Matrix& map(const std::string& name) const;
};

/// Parses the JSON bundle document; throws BundleError with position info
/// on syntax errors and a reason on semantic errors. Tensors flagged
/// skew_complete are extended by permutation sign on load.
AlgebraBundle parse_bundle(const std::string& text);

/// Canonical serialization: sorted keys, canonical scalar strings, full
/// tables (no skew_complete shorthand). parse o serialize is the identity.
std::string serialize_bundle(const AlgebraBundle& b);

/// Built-in example catalog over the given field.
AlgebraBundle catalog_bundle(const FieldSpec& f);

}  // namespace homalg
