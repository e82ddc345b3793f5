#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homalg/matrix.hpp"

using namespace homalg;

namespace {

std::mt19937 rng(20240823);

Scalar random_scalar(const FieldSpec& f) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<long> d(0, f.p() - 1);
    return Scalar::of(f, d(rng));
  }
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  return Scalar::fraction(num(rng), den(rng));
}

Matrix random_matrix(const FieldSpec& f, int n) {
  Matrix m(n, n, f);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = random_scalar(f);
  return m;
}

}  // namespace

TEST_CASE("field spec basics") {
  CHECK(FieldSpec::rationals().is_rational());
  CHECK(FieldSpec::prime(5).p() == 5);
  CHECK_THROWS(FieldSpec::prime(6));
  CHECK_THROWS(FieldSpec::prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
}

TEST_CASE("scalar canonical forms and parsing") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::fraction(2, 4).to_string() == "1/2");
  CHECK(Scalar::fraction(-2, 4).to_string() == "-1/2");
  CHECK(Scalar::fraction(4, 2).to_string() == "2");
  CHECK(Scalar::parse(q, "-7/3").to_string() == "-7/3");
  CHECK(Scalar::parse(q, "5") == Scalar::of(q, 5));
  CHECK_THROWS(Scalar::fraction(1, 0));
  CHECK_THROWS(Scalar::parse(q, "1/0"));
  CHECK_THROWS(Scalar::parse(q, "abc"));

  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar::of(f7, 10).residue() == 3);
  CHECK(Scalar::of(f7, -1).residue() == 6);
  CHECK(Scalar::parse(f7, "12").residue() == 5);
}

TEST_CASE("scalar field axioms on random triples") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int i = 0; i < 1000; ++i) {
      Scalar a = random_scalar(f), b = random_scalar(f), c = random_scalar(f);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("scalar inverse and pow over F_p") {
  FieldSpec f = FieldSpec::prime(13);
  for (long r = 1; r < 13; ++r) {
    Scalar a = Scalar::of(f, r);
    CHECK(a * a.inverse() == Scalar::one(f));
    CHECK(a.pow(12) == Scalar::one(f));  // Fermat
  }
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
}

TEST_CASE("field mixing throws") {
  Scalar a = Scalar::of(FieldSpec::prime(3), 1);
  Scalar b = Scalar::of(FieldSpec::prime(5), 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * Scalar::one(FieldSpec::rationals()), FieldMismatch);
}

TEST_CASE("matrix algebra basics") {
  FieldSpec q = FieldSpec::rationals();
  Matrix a = Matrix::from_ints(2, 2, q, {1, 2, 3, 4});
  Matrix b = Matrix::from_ints(2, 2, q, {0, 1, 1, 0});
  CHECK((a * b) == Matrix::from_ints(2, 2, q, {2, 1, 4, 3}));
  CHECK((a + b - b) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(Matrix::identity(2, q) * a == a);
  CHECK(a.pow(0) == Matrix::identity(2, q));
  CHECK(a.pow(3) == a * a * a);
  CHECK(!commutes(a, b));
  CHECK(commutes(a, a.pow(2)));

  Vec v = {Scalar::of(q, 1), Scalar::of(q, -1)};
  Vec av = a.apply(v);
  CHECK(av[0] == Scalar::of(q, -1));
  CHECK(av[1] == Scalar::of(q, -1));
}

TEST_CASE("exact inverse round-trips on random F_5 matrices") {
  FieldSpec f = FieldSpec::prime(5);
  int invertible = 0;
  for (int i = 0; i < 200; ++i) {
    Matrix m = random_matrix(f, 3);
    auto inv = m.inverse();
    if (!inv) {
      CHECK(m.rank() < 3);
      continue;
    }
    ++invertible;
    CHECK((*inv * m).is_identity());
    CHECK((m * *inv).is_identity());
    CHECK(m.rank() == 3);
  }
  CHECK(invertible > 100);
}

TEST_CASE("exact inverse over Q keeps fractions exact") {
  FieldSpec q = FieldSpec::rationals();
  Matrix m(2, 2, q);
  m.at(0, 0) = Scalar::fraction(1, 2);
  m.at(0, 1) = Scalar::fraction(1, 3);
  m.at(1, 0) = Scalar::fraction(1, 4);
  m.at(1, 1) = Scalar::fraction(1, 5);
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK(inv->at(0, 0) == Scalar::fraction(12, 1));
}

TEST_CASE("rank-nullity and kernel basis") {
  FieldSpec f = FieldSpec::prime(5);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> dim(1, 4);
    int rows = dim(rng), cols = dim(rng);
    Matrix m(rows, cols, f);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = random_scalar(f);
    auto ker = m.kernel_basis();
    CHECK(m.rank() + static_cast<int>(ker.size()) == cols);
    for (const auto& v : ker) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("kernel basis is deterministic with ascending free columns") {
  FieldSpec q = FieldSpec::rationals();
  // x + y + z = 0: pivot col 0, free cols 1 and 2.
  Matrix m = Matrix::from_ints(1, 3, q, {1, 1, 1});
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 2);
  CHECK(ker[0][1] == Scalar::one(q));
  CHECK(ker[0][2].is_zero());
  CHECK(ker[1][1].is_zero());
  CHECK(ker[1][2] == Scalar::one(q));
}

TEST_CASE("vector helpers") {
  FieldSpec q = FieldSpec::rationals();
  Vec e1 = basis_vec(q, 3, 1), e3 = basis_vec(q, 3, 3);
  CHECK(vec_is_zero(zero_vec(q, 3)));
  CHECK(vec_is_zero(vec_sub(e1, e1)));
  Vec acc = zero_vec(q, 3);
  vec_axpy(acc, Scalar::of(q, 2), e3);
  CHECK(acc[2] == Scalar::of(q, 2));
  CHECK(vec_add(e1, vec_neg(e1)) == zero_vec(q, 3));
  CHECK(vec_scale(Scalar::of(q, 3), e1)[0] == Scalar::of(q, 3));
  CHECK_THROWS_AS(vec_add(e1, zero_vec(q, 2)), DimensionMismatch);
}
