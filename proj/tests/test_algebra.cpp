#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homalg/tensor.hpp"

using namespace homalg;

namespace {

std::mt19937 rng(987654);

Scalar random_scalar(const FieldSpec& f) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<long> d(0, f.p() - 1);
    return Scalar::of(f, d(rng));
  }
  std::uniform_int_distribution<long> num(-9, 9);
  return Scalar::of(f, num(rng));
}

Vec random_vec(const FieldSpec& f, int n) {
  Vec v = zero_vec(f, n);
  for (auto& s : v) s = random_scalar(f);
  return v;
}

StructureTensor random_tensor(const FieldSpec& f, int dim, int arity) {
  StructureTensor t(dim, arity, f);
  for (const auto& tuple : t.all_tuples()) t.set(tuple, random_vec(f, dim));
  return t;
}

}  // namespace

TEST_CASE("tensor stores only nonzero entries") {
  FieldSpec q = FieldSpec::rationals();
  StructureTensor t(3, 2, q);
  CHECK(t.is_zero());
  t.set({1, 2}, basis_vec(q, 3, 3));
  CHECK(t.table().size() == 1);
  t.set({1, 2}, zero_vec(q, 3));
  CHECK(t.is_zero());
  CHECK(t.coeff_ptr({1, 2}) == nullptr);
  CHECK(vec_is_zero(t.coeff({2, 2})));
}

TEST_CASE("tensor bounds validation") {
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS(StructureTensor(9, 2, q));   // dim > 8
  CHECK_THROWS(StructureTensor(2, 5, q));   // arity > 4
  CHECK_THROWS(StructureTensor(2, 1, q));   // arity < 2
  StructureTensor t(2, 2, q);
  CHECK_THROWS(t.set({0, 1}, zero_vec(q, 2)));
  CHECK_THROWS(t.set({1, 3}, zero_vec(q, 2)));
  CHECK_THROWS(t.set({1}, zero_vec(q, 2)));
  CHECK_THROWS(t.set({1, 2}, zero_vec(q, 3)));
}

TEST_CASE("all_tuples is lexicographic and complete") {
  StructureTensor t(2, 3, FieldSpec::prime(3));
  auto tuples = t.all_tuples();
  CHECK(tuples.size() == 8);
  CHECK(tuples.front() == IndexTuple{1, 1, 1});
  CHECK(tuples[1] == IndexTuple{1, 1, 2});
  CHECK(tuples.back() == IndexTuple{2, 2, 2});
  for (size_t i = 1; i < tuples.size(); ++i) CHECK(tuples[i - 1] < tuples[i]);
}

TEST_CASE("eval agrees with table on basis tuples and is multilinear") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int inst = 0; inst < 100; ++inst) {
      StructureTensor t = random_tensor(f, 3, 2);
      for (const auto& tuple : t.all_tuples()) {
        std::vector<Vec> args;
        for (int i : tuple) args.push_back(basis_vec(f, 3, i));
        CHECK(t.eval(args) == t.coeff(tuple));
      }
      // Linearity in each slot on random vectors.
      Vec x = random_vec(f, 3), y = random_vec(f, 3), z = random_vec(f, 3);
      Scalar s = random_scalar(f);
      for (int slot = 0; slot < 2; ++slot) {
        std::vector<Vec> a{x, z}, b{y, z}, c{vec_add(x, vec_scale(s, y)), z};
        if (slot == 1) {
          a = {z, x};
          b = {z, y};
          c = {z, vec_add(x, vec_scale(s, y))};
        }
        Vec expect = t.eval(a);
        vec_axpy(expect, s, t.eval(b));
        CHECK(t.eval(c) == expect);
      }
    }
  }
}

TEST_CASE("skew_symmetrize extends by permutation sign") {
  FieldSpec q = FieldSpec::rationals();
  StructureTensor t(4, 3, q);
  t.set({1, 2, 3}, basis_vec(q, 4, 4));
  StructureTensor s = skew_symmetrize(t);
  CHECK(s.coeff({1, 2, 3}) == basis_vec(q, 4, 4));
  CHECK(s.coeff({2, 1, 3}) == vec_neg(basis_vec(q, 4, 4)));
  CHECK(s.coeff({3, 1, 2}) == basis_vec(q, 4, 4));
  CHECK(s.coeff({3, 2, 1}) == vec_neg(basis_vec(q, 4, 4)));
  CHECK(vec_is_zero(s.coeff({1, 1, 3})));
  CHECK(s.table().size() == 6);
}

TEST_CASE("skew_symmetrize rejects non-increasing support and is idempotent-compatible") {
  FieldSpec q = FieldSpec::rationals();
  StructureTensor bad(3, 2, q);
  bad.set({2, 1}, basis_vec(q, 3, 1));
  CHECK_THROWS(skew_symmetrize(bad));

  StructureTensor t(3, 2, q);
  t.set({1, 2}, basis_vec(q, 3, 3));
  t.set({1, 3}, basis_vec(q, 3, 2));
  StructureTensor s1 = skew_symmetrize(t);
  // Re-extracting the increasing part and skew-symmetrizing again is a no-op.
  StructureTensor incr(3, 2, q);
  for (const auto& [tuple, coeff] : s1.table()) {
    bool increasing = true;
    for (size_t i = 1; i < tuple.size(); ++i)
      if (tuple[i - 1] >= tuple[i]) increasing = false;
    if (increasing) incr.set(tuple, coeff);
  }
  CHECK(skew_symmetrize(incr) == s1);
}

TEST_CASE("hom algebra brackets and twist") {
  FieldSpec q = FieldSpec::rationals();
  StructureTensor t(3, 2, q);
  t.set({1, 2}, basis_vec(q, 3, 3));
  HomAlgebra h3(skew_symmetrize(t), Matrix::identity(3, q), "H3");
  CHECK(h3.dim() == 3);
  CHECK(h3.arity() == 2);
  CHECK(h3.bracket2(h3.basis(1), h3.basis(2)) == h3.basis(3));
  CHECK(h3.bracket2(h3.basis(2), h3.basis(1)) == vec_neg(h3.basis(3)));
  CHECK(h3.alpha(h3.basis(2)) == h3.basis(2));
  CHECK(algebra_equal(h3, h3));

  Matrix other = Matrix::identity(3, q).scaled(Scalar::of(q, 2));
  HomAlgebra twisted(h3.tensor(), other, "H3x2");
  CHECK(!algebra_equal(h3, twisted));
}

TEST_CASE("linear functional application") {
  FieldSpec f5 = FieldSpec::prime(5);
  LinearFunctional f{f5, {Scalar::of(f5, 1), Scalar::of(f5, 2), Scalar::of(f5, 0)}};
  Vec v = {Scalar::of(f5, 3), Scalar::of(f5, 4), Scalar::of(f5, 1)};
  CHECK(f.apply(v) == Scalar::of(f5, 11 % 5));
  CHECK_THROWS_AS(f.apply(zero_vec(f5, 2)), DimensionMismatch);
}

TEST_CASE("structure tensor equality is semantic") {
  FieldSpec q = FieldSpec::rationals();
  StructureTensor a(2, 2, q), b(2, 2, q);
  a.set({1, 2}, basis_vec(q, 2, 1));
  b.set({1, 2}, basis_vec(q, 2, 1));
  b.set({2, 2}, zero_vec(q, 2));  // storing zero must not break equality
  CHECK(a == b);
  b.set({2, 1}, basis_vec(q, 2, 2));
  CHECK(a != b);
}
