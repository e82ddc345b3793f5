#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "homalg/field.hpp"

namespace homalg {

/// An exact field element: a reduced fraction over Q, or a residue in [0, p).
/// Arithmetic keeps values canonical; mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of(const FieldSpec& f, long n);
  static Scalar fraction(long num, long den);

  /// Parses "a", "-a" or "a/b" (Q) or a decimal residue (F_p).
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar pow(unsigned long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Residue value for prime-field scalars.
  long residue() const;
  const mpq_class& rational() const;

  std::string to_string() const;

 private:
  Scalar(const FieldSpec& f, mpq_class q) : field_(f), v_(std::move(q)) {}
  Scalar(const FieldSpec& f, long r) : field_(f), v_(r) {}
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, long> v_;
};

}  // namespace homalg
