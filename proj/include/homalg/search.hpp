#pragma once

#include <functional>

#include "homalg/axioms.hpp"

namespace homalg {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RationalsUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SearchSpec {
  HomAlgebra algebra;
  Scalar weight;
  OperatorKind kind = OperatorKind::RotaBaxter;
  unsigned long long budget = 100000000;  // max candidates scanned
  long max_results = -1;                  // unlimited when negative
  int jobs = 1;
};

struct SearchResult {
  /// Lexicographic by row-major entry residues; every operator passes the
  /// corresponding checker.
  std::vector<WeightedOperator> operators;
  unsigned long long candidates_scanned = 0;
  double elapsed_seconds = 0;
};

/// All d x d matrices over F_p satisfying the Rota-Baxter identity at the
/// given weight, by exhaustive scan.
SearchResult enumerate_rota_baxter(const SearchSpec& spec);

/// All matrices satisfying the weighted Leibniz rule at the given weight.
SearchResult enumerate_weighted_derivations(const SearchSpec& spec);

/// Exhaustive scan over all d x d matrices, keeping those accepted by the
/// predicate; shared engine behind the two enumerations.
SearchResult enumerate_matrices(const HomAlgebra& a, unsigned long long budget, long max_results,
                                int jobs, const std::function<bool(const Matrix&)>& accept);

struct FunctionalSearch {
  /// Basis of { f : f vanishes on the span of all bracket values }.
  std::vector<LinearFunctional> linear_basis;
  /// Full admissibility: the above plus linear dependence of f o alpha and f.
  std::function<bool(const LinearFunctional&)> is_admissible;
  /// Exhaustive list of admissible functionals (prime fields, small budget).
  std::vector<LinearFunctional> exhaustive;
};

FunctionalSearch admissible_functionals(const HomAlgebra& a,
                                        unsigned long long budget = 100000000);

/// Basis of the solution space of the alpha^k-derivation conditions (linear
/// in D): the twisted Leibniz rule on basis pairs plus D alpha = alpha D.
std::vector<Matrix> solve_linear_derivations(const HomAlgebra& a, int k);

}  // namespace homalg
