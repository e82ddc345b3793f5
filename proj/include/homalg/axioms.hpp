#pragma once

#include <optional>

#include "homalg/report.hpp"

namespace homalg {

/// Written forms of the ternary fundamental identity.
enum class NambuForm { Eq33, Eq3, Eq2 };

enum class KernelVariant { Thm1Lie, Thm2PreLie, Thm7Assoc, Thm3fD, CorP2 };

/// Skew-symmetry of the n-linear product: swapping any two slots negates
/// the coefficient vector; repeated indices force zero. Probes all dim^arity
/// tuples.
AxiomReport is_skew_symmetric(const StructureTensor& t,
                              int cap = AxiomReport::kDefaultViolationCap);

/// alpha(<x1,...,xn>) = <alpha(x1),...,alpha(xn)> on all basis tuples.
AxiomReport check_multiplicative(const HomAlgebra& a,
                                 int cap = AxiomReport::kDefaultViolationCap);

/// The n-ary fundamental identity, twisted by alpha, on all dim^(2n-1)
/// basis tuples (y2,...,yn,x1,...,xn).
AxiomReport check_hom_nambu(const HomAlgebra& a, int cap = AxiomReport::kDefaultViolationCap);

/// One of the three equivalent written forms of the ternary identity.
AxiomReport check_nambu_form(const HomAlgebra& a, NambuForm form,
                             int cap = AxiomReport::kDefaultViolationCap);

/// alpha(x)(yz) = (xy)alpha(z).
AxiomReport check_hom_associative(const HomAlgebra& a,
                                  int cap = AxiomReport::kDefaultViolationCap);

AxiomReport check_commutative(const HomAlgebra& a, int cap = AxiomReport::kDefaultViolationCap);

/// The twisted associator is symmetric in its first two arguments.
AxiomReport check_hom_prelie(const HomAlgebra& a, int cap = AxiomReport::kDefaultViolationCap);

/// Skew-symmetry plus the cyclic twisted Jacobi identity.
AxiomReport check_hom_lie(const HomAlgebra& a, int cap = AxiomReport::kDefaultViolationCap);

/// The three conditions of a multiplicative Hom-Lie triple system.
AxiomReport check_hom_lie_triple(const HomAlgebra& a,
                                 int cap = AxiomReport::kDefaultViolationCap);

/// m(xy) = m(x)y = x m(y) on all basis pairs.
AxiomReport check_centroid(const HomAlgebra& a, const Matrix& m,
                           int cap = AxiomReport::kDefaultViolationCap);

/// w^2 = id and w(xy) = w(x)w(y).
AxiomReport check_involution(const HomAlgebra& a, const Matrix& w,
                             int cap = AxiomReport::kDefaultViolationCap);

/// D alpha = alpha D and D(xy) = D(x)alpha^k(y) + alpha^k(x)D(y).
AxiomReport check_alpha_k_derivation(const HomAlgebra& a, const Matrix& d, int k,
                                     int cap = AxiomReport::kDefaultViolationCap);

/// The weighted Leibniz rule: d commutes with alpha and
/// d(<x1..xn>) = sum over nonempty I of weight^(|I|-1) <...> with d on the
/// I-slots and alpha elsewhere.
AxiomReport check_derivation_weight(const HomAlgebra& a, const WeightedOperator& d,
                                    int cap = AxiomReport::kDefaultViolationCap);

/// <P(x1),...,P(xn)> = P(sum over nonempty I of weight^(|I|-1) <...>) with
/// the identity on the I-slots and P elsewhere.
AxiomReport check_rota_baxter(const HomAlgebra& a, const WeightedOperator& p,
                              int cap = AxiomReport::kDefaultViolationCap);

/// Kernel-membership conditions attached to the construction theorems: the
/// variant's vector expression, evaluated on every basis triple, must be
/// annihilated by P + weight*id (or P^2 for CorP2).
AxiomReport check_kernel_condition(const HomAlgebra& base, const LinearFunctional& f,
                                   const WeightedOperator& p, KernelVariant variant,
                                   const std::optional<Matrix>& d = std::nullopt,
                                   int cap = AxiomReport::kDefaultViolationCap);

// Short-circuit predicates for enumeration loops; verdicts agree with the
// report checkers on every input.
bool holds_rota_baxter(const HomAlgebra& a, const Matrix& p, const Scalar& weight);
bool holds_derivation_weight(const HomAlgebra& a, const Matrix& d, const Scalar& weight);
bool holds_kernel_condition(const HomAlgebra& base, const LinearFunctional& f, const Matrix& p,
                            const Scalar& weight, KernelVariant variant,
                            const std::optional<Matrix>& dmat = std::nullopt);

/// Columns of m as vectors; column i is the image of basis vector e_{i+1}.
std::vector<Vec> matrix_columns(const Matrix& m);

const char* kernel_variant_name(KernelVariant v);

}  // namespace homalg
