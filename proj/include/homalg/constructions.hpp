#pragma once

#include <optional>

#include "homalg/axioms.hpp"

namespace homalg {

/// Raised when a construction's machine-checked hypothesis fails; carries
/// the failing report.
struct HypothesisFailed : std::runtime_error {
  explicit HypothesisFailed(AxiomReport r)
      : std::runtime_error("hypothesis failed: " + r.summary()), report(std::move(r)) {}
  AxiomReport report;
};

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonzeroWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Which structure a ternary algebra is declared to carry.
enum class TernaryStructure { NambuLie, LieTriple };

struct ConstructionResult {
  HomAlgebra algebra;
  /// Secondary output where a construction also yields a bracket (the
  /// sub-adjacent commutator).
  std::optional<HomAlgebra> sub_adjacent;
  std::vector<AxiomReport> hypothesis_reports;  // all passing by construction
  std::vector<AxiomReport> conclusion_reports;  // filled when verify_conclusion
  /// Non-binding checks: recorded, allowed to fail.
  std::vector<AxiomReport> advisory_reports;

  bool conclusions_pass() const;
};

/// [x,y,z]_f = f(x)[y,z] + f(y)[z,x] + f(z)[x,y] on a Hom-Lie algebra with
/// an admissible functional.
ConstructionResult bracket_from_functional(const HomAlgebra& a, const LinearFunctional& f,
                                           bool verify_conclusion = true);

/// Same ternary bracket built through the twisted commutator [,]_a = a o [,]
/// of a plain Lie algebra; realized as yau_twist then bracket_from_functional
/// and cross-checked against the direct formula.
ConstructionResult bracket_from_functional_twisted(const HomAlgebra& a, const Matrix& alpha,
                                                   const LinearFunctional& f,
                                                   bool verify_conclusion = true);

/// Bracket beta o <...> with twist beta, for a bracket endomorphism beta of
/// an untwisted algebra.
ConstructionResult yau_twist(const HomAlgebra& a, const Matrix& beta,
                             bool verify_conclusion = true);

/// Sub-adjacent commutator [x,y] = x*y - y*x of a Hom-preLie product.
ConstructionResult commutator_bracket(const HomAlgebra& a, bool verify_conclusion = true);

/// x.y = P(x)*y - y*P(x) on a weight-zero Rota-Baxter Hom-preLie algebra
/// with alpha P = P alpha.
ConstructionResult rb_prelie_double(const HomAlgebra& a, const WeightedOperator& p,
                                    bool verify_conclusion = true);

/// x*y = x.D(y) on a commutative Hom-associative algebra; also emits the
/// sub-adjacent bracket x.D(y) - y.D(x).
ConstructionResult prelie_from_derivation(const HomAlgebra& a, const Matrix& d,
                                          const WeightedOperator& p,
                                          bool verify_conclusion = true);

/// Product gamma(x).y with twist gamma, for gamma in the centroid commuting
/// with P.
ConstructionResult centroid_twist(const HomAlgebra& a, const Matrix& gamma,
                                  const WeightedOperator& p, bool verify_conclusion = true);

/// Ternary determinant bracket with rows f(.), D(.), id on a commutative
/// Hom-associative algebra.
ConstructionResult bracket_det_fD(const HomAlgebra& a, const LinearFunctional& f,
                                  const Matrix& d, bool verify_conclusion = true);

/// Ternary determinant bracket with rows omega(.), id, D(.) for an
/// involution omega anticommuting with the derivation D.
ConstructionResult bracket_det_omegaD(const HomAlgebra& a, const Matrix& w, const Matrix& d,
                                      bool verify_conclusion = true);

/// The seven-term derived bracket of a ternary Rota-Baxter algebra.
ConstructionResult derived_bracket(const HomAlgebra& a, const WeightedOperator& p,
                                   TernaryStructure declared = TernaryStructure::NambuLie,
                                   bool verify_conclusion = true);

/// Direct closed form of the derived bracket of [.,.,.]_f; agrees with
/// derived_bracket(bracket_from_functional(a, f), p).
ConstructionResult bracket_fP(const HomAlgebra& a, const LinearFunctional& f,
                              const WeightedOperator& p, bool verify_conclusion = true);

/// (f(x)P(y)-f(y)P(x))*z - z*(f(x)P(y)-f(y)P(x)) + cyclic, on a weight-zero
/// Rota-Baxter Hom-preLie algebra.
ConstructionResult bracket_eq23(const HomAlgebra& a, const LinearFunctional& f,
                                const WeightedOperator& p, bool verify_conclusion = true);

/// x,y,z -> d([d^{-1}x, d^{-1}y, d^{-1}z]) for an invertible weighted
/// derivation d commuting with an automorphism twist.
ConstructionResult bracket_dinv_alpha(const HomAlgebra& a, const WeightedOperator& d,
                                      bool verify_conclusion = true);

enum class DualizeDirection { RBtoDiff, DiffToRB };

/// The weight-preserving bijection between invertible Rota-Baxter and
/// differential operators: P -> alpha P^{-1} and back.
WeightedOperator dualize(const HomAlgebra& a, const WeightedOperator& op,
                         DualizeDirection direction);

// Hypothesis reports shared with the search module.
AxiomReport report_functional_annihilates(const HomAlgebra& a, const LinearFunctional& f);
AxiomReport report_functional_alpha_compat(const HomAlgebra& a, const LinearFunctional& f);

}  // namespace homalg
