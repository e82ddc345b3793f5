#pragma once

#include <map>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

using IndexTuple = std::vector<int>;  // 1-based basis indices

/// Structure constants of an n-linear product: a map from basis index
/// tuples to coefficient vectors. Absent tuples are zero. Only nonzero
/// vectors are stored, so map equality is semantic equality.
class StructureTensor {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr int kMaxArity = 4;

  StructureTensor(int dim, int arity, const FieldSpec& f);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const FieldSpec& field() const { return field_; }

  /// Stores coeff at tuple; a zero vector erases the entry.
  void set(const IndexTuple& tuple, const Vec& coeff);
  /// Coefficient vector at tuple (zero when absent).
  Vec coeff(const IndexTuple& tuple) const;
  const Vec* coeff_ptr(const IndexTuple& tuple) const;  // null when absent

  const std::map<IndexTuple, Vec>& table() const { return table_; }

  /// Multilinear evaluation on arbitrary vectors.
  Vec eval(const std::vector<Vec>& args) const;
  /// Evaluation on a basis tuple (table lookup).
  Vec eval_basis(const IndexTuple& tuple) const { return coeff(tuple); }

  bool operator==(const StructureTensor& o) const;
  bool operator!=(const StructureTensor& o) const { return !(*this == o); }
  bool is_zero() const { return table_.empty(); }

  /// Enumerates all dim^arity index tuples in lexicographic order.
  std::vector<IndexTuple> all_tuples() const;

 private:
  void check_tuple(const IndexTuple& tuple) const;
  int dim_, arity_;
  FieldSpec field_;
  std::map<IndexTuple, Vec> table_;
};

/// Extends a tensor given on strictly increasing tuples by the sign of the
/// permutation; tuples with repeats map to zero. Throws if the input has an
/// entry on a non-increasing tuple.
StructureTensor skew_symmetrize(const StructureTensor& t);

/// A product together with its twisting map.
class HomAlgebra {
 public:
  HomAlgebra(StructureTensor tensor, Matrix twist, std::string name = "");

  int dim() const { return tensor_.dim(); }
  int arity() const { return tensor_.arity(); }
  const FieldSpec& field() const { return tensor_.field(); }
  const StructureTensor& tensor() const { return tensor_; }
  const Matrix& twist() const { return twist_; }
  const std::string& name() const { return name_; }

  Vec bracket(const std::vector<Vec>& args) const;
  Vec bracket2(const Vec& x, const Vec& y) const { return bracket({x, y}); }
  Vec bracket3(const Vec& x, const Vec& y, const Vec& z) const { return bracket({x, y, z}); }
  Vec alpha(const Vec& v) const { return twist_.apply(v); }

  Vec basis(int i) const { return basis_vec(field(), dim(), i); }

 private:
  StructureTensor tensor_;
  Matrix twist_;
  std::string name_;
};

bool algebra_equal(const HomAlgebra& a, const HomAlgebra& b);

struct LinearFunctional {
  FieldSpec field;
  Vec covector;

  Scalar apply(const Vec& v) const;
};

enum class OperatorKind { RotaBaxter, Derivation, AlphaKDerivation };

struct WeightedOperator {
  Matrix matrix;
  Scalar weight;
  OperatorKind kind = OperatorKind::RotaBaxter;
  int alpha_power = 0;  // only for AlphaKDerivation
};

}  // namespace homalg
