#include "homalg/tensor.hpp"

#include <algorithm>

namespace homalg {

StructureTensor::StructureTensor(int dim, int arity, const FieldSpec& f)
    : dim_(dim), arity_(arity), field_(f) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dimension must be in [1, 8], got " + std::to_string(dim));
  if (arity < 2 || arity > kMaxArity)
    throw std::invalid_argument("arity must be in [2, 4], got " + std::to_string(arity));
}

void StructureTensor::check_tuple(const IndexTuple& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw DimensionMismatch("index tuple length does not match arity");
  for (int i : tuple)
    if (i < 1 || i > dim_)
      throw std::invalid_argument("basis index " + std::to_string(i) + " out of [1, " +
                                  std::to_string(dim_) + "]");
}

void StructureTensor::set(const IndexTuple& tuple, const Vec& coeff) {
  check_tuple(tuple);
  if (static_cast<int>(coeff.size()) != dim_)
    throw DimensionMismatch("coefficient vector length does not match dimension");
  for (const auto& s : coeff)
    if (s.field() != field_) throw FieldMismatch("coefficient field mismatch");
  if (vec_is_zero(coeff))
    table_.erase(tuple);
  else
    table_[tuple] = coeff;
}

Vec StructureTensor::coeff(const IndexTuple& tuple) const {
  check_tuple(tuple);
  auto it = table_.find(tuple);
  return it == table_.end() ? zero_vec(field_, dim_) : it->second;
}

const Vec* StructureTensor::coeff_ptr(const IndexTuple& tuple) const {
  auto it = table_.find(tuple);
  return it == table_.end() ? nullptr : &it->second;
}

Vec StructureTensor::eval(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw DimensionMismatch("argument count does not match arity");
  for (const auto& v : args) {
    if (static_cast<int>(v.size()) != dim_)
      throw DimensionMismatch("argument length does not match dimension");
    for (const auto& s : v)
      if (s.field() != field_) throw FieldMismatch("argument field mismatch");
  }
  Vec out = zero_vec(field_, dim_);
  for (const auto& [tuple, coeff] : table_) {
    Scalar c = Scalar::one(field_);
    bool zero = false;
    for (int slot = 0; slot < arity_; ++slot) {
      const Scalar& x = args[static_cast<size_t>(slot)][static_cast<size_t>(tuple[slot] - 1)];
      if (x.is_zero()) {
        zero = true;
        break;
      }
      c *= x;
    }
    if (!zero) vec_axpy(out, c, coeff);
  }
  return out;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
  return dim_ == o.dim_ && arity_ == o.arity_ && field_ == o.field_ && table_ == o.table_;
}

std::vector<IndexTuple> StructureTensor::all_tuples() const {
  std::vector<IndexTuple> out;
  IndexTuple t(static_cast<size_t>(arity_), 1);
  while (true) {
    out.push_back(t);
    int slot = arity_ - 1;
    while (slot >= 0 && t[slot] == dim_) {
      t[slot] = 1;
      --slot;
    }
    if (slot < 0) break;
    ++t[slot];
  }
  return out;
}

namespace {
int permutation_sign(const IndexTuple& from, IndexTuple to) {
  // sign of the permutation carrying `to` to sorted order = sign carrying
  // `from` (sorted) to `to`; counts inversions removed by bubble sort
  int sign = 1;
  for (size_t i = 0; i + 1 < to.size(); ++i)
    for (size_t j = 0; j + 1 < to.size() - i; ++j)
      if (to[j] > to[j + 1]) {
        std::swap(to[j], to[j + 1]);
        sign = -sign;
      }
  if (to != from) throw std::logic_error("tuples are not rearrangements of each other");
  return sign;
}
}  // namespace

StructureTensor skew_symmetrize(const StructureTensor& t) {
  for (const auto& [tuple, coeff] : t.table()) {
    (void)coeff;
    if (!std::is_sorted(tuple.begin(), tuple.end()) ||
        std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end())
      throw std::invalid_argument("skew_symmetrize input must be supported on strictly "
                                  "increasing tuples");
  }
  StructureTensor out(t.dim(), t.arity(), t.field());
  for (const auto& [tuple, coeff] : t.table()) {
    IndexTuple perm = tuple;
    std::sort(perm.begin(), perm.end());
    do {
      int sign = permutation_sign(tuple, perm);
      out.set(perm, sign > 0 ? coeff : vec_neg(coeff));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

HomAlgebra::HomAlgebra(StructureTensor tensor, Matrix twist, std::string name)
    : tensor_(std::move(tensor)), twist_(std::move(twist)), name_(std::move(name)) {
  if (twist_.rows() != tensor_.dim() || twist_.cols() != tensor_.dim())
    throw DimensionMismatch("twist shape does not match algebra dimension");
  if (twist_.field() != tensor_.field()) throw FieldMismatch("twist field mismatch");
}

Vec HomAlgebra::bracket(const std::vector<Vec>& args) const { return tensor_.eval(args); }

bool algebra_equal(const HomAlgebra& a, const HomAlgebra& b) {
  return a.dim() == b.dim() && a.arity() == b.arity() && a.field() == b.field() &&
         a.twist() == b.twist() && a.tensor() == b.tensor();
}

Scalar LinearFunctional::apply(const Vec& v) const {
  if (v.size() != covector.size()) throw DimensionMismatch("functional length mismatch");
  Scalar r = Scalar::zero(field);
  for (size_t i = 0; i < v.size(); ++i) {
    Scalar t = covector[i];
    t *= v[i];
    r += t;
  }
  return r;
}

}  // namespace homalg
