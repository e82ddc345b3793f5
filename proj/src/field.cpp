#include "homalg/field.hpp"

namespace homalg {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

}  // namespace homalg
