#pragma once

#include <optional>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, int n);
Vec basis_vec(const FieldSpec& f, int n, int i);  // i is 1-based
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& s, const Vec& v);
void vec_axpy(Vec& acc, const Scalar& s, const Vec& v);  // acc += s*v

/// Dense exact matrix over a fixed field, row-major.
class Matrix {
 public:
  Matrix(int rows, int cols, const FieldSpec& f);
  static Matrix identity(int n, const FieldSpec& f);
  static Matrix zero(int rows, int cols, const FieldSpec& f);
  /// Builds from row-major integer entries (reduced mod p over F_p).
  static Matrix from_ints(int rows, int cols, const FieldSpec& f,
                          const std::vector<long>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  Matrix pow(unsigned long k) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  /// Exact inverse by Gauss-Jordan elimination; empty when singular.
  std::optional<Matrix> inverse() const;
  int rank() const;
  /// Basis of the right null space, deterministic (free columns ascending).
  std::vector<Vec> kernel_basis() const;

  std::string to_string() const;

 private:
  void check_field(const Matrix& o) const;
  int rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> e_;
};

bool commutes(const Matrix& a, const Matrix& b);

}  // namespace homalg
