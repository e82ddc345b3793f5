#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The coefficient field: the rationals, or Z/p for a prime p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(long p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  long p() const { return p_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldSpec(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

bool is_prime(long n);

}  // namespace homalg
