#include "homalg/matrix.hpp"

#include <sstream>

namespace homalg {

Vec zero_vec(const FieldSpec& f, int n) { return Vec(static_cast<size_t>(n), Scalar::zero(f)); }

Vec basis_vec(const FieldSpec& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<size_t>(i - 1)] = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void vec_axpy(Vec& acc, const Scalar& s, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector length mismatch");
  if (s.is_zero()) return;
  for (size_t i = 0; i < acc.size(); ++i) {
    Scalar t = v[i];
    t *= s;
    acc[i] += t;
  }
}

Matrix::Matrix(int rows, int cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::zero(int rows, int cols, const FieldSpec& f) { return Matrix(rows, cols, f); }

Matrix Matrix::from_ints(int rows, int cols, const FieldSpec& f,
                         const std::vector<long>& entries) {
  if (entries.size() != static_cast<size_t>(rows) * cols)
    throw DimensionMismatch("entry count does not match shape");
  Matrix m(rows, cols, f);
  for (size_t i = 0; i < entries.size(); ++i) m.e_[i] = Scalar::of(f, entries[i]);
  return m;
}

void Matrix::check_field(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix field mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        Scalar t = o.at(k, j);
        t *= a;
        r.at(i, j) += t;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec r = zero_vec(field_, rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[static_cast<size_t>(j)].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      Scalar t = at(i, j);
      t *= v[static_cast<size_t>(j)];
      r[static_cast<size_t>(i)] += t;
    }
  }
  return r;
}

Matrix Matrix::pow(unsigned long k) const {
  if (rows_ != cols_) throw DimensionMismatch("power of non-square matrix");
  Matrix r = identity(rows_, field_);
  Matrix base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  return e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_, field_);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n, field_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Scalar pinv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        Scalar t = a.at(col, j);
        t *= factor;
        a.at(r, j) -= t;
        t = inv.at(col, j);
        t *= factor;
        inv.at(r, j) -= t;
      }
    }
  }
  return inv;
}

namespace {
// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& a) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(lead, j));
    Scalar pinv = a.at(lead, col).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(lead, j) *= pinv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (int j = 0; j < a.cols(); ++j) {
        Scalar t = a.at(lead, j);
        t *= factor;
        a.at(r, j) -= t;
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}
}  // namespace

int Matrix::rank() const {
  Matrix a = *this;
  return static_cast<int>(rref(a).size());
}

std::vector<Vec> Matrix::kernel_basis() const {
  Matrix a = *this;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = zero_vec(field_, cols_);
    v[static_cast<size_t>(free)] = Scalar::one(field_);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[static_cast<size_t>(pivots[pr])] = -a.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

bool commutes(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("commutes() needs square matrices of equal size");
  return a * b == b * a;
}

}  // namespace homalg
