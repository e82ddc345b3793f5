#include "homalg/scalar.hpp"

#include <stdexcept>

namespace homalg {

namespace {
long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}
}  // namespace

Scalar Scalar::zero(const FieldSpec& f) { return of(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of(f, 1); }

Scalar Scalar::of(const FieldSpec& f, long n) {
  if (f.is_rational()) return Scalar(f, mpq_class(n));
  return Scalar(f, mod(n, f.p()));
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (f.is_prime_field()) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad residue literal: " + s);
    return of(f, v);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator in: " + s);
  q.canonicalize();
  return Scalar(f, std::move(q));
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
  return std::get<long>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<long>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalar field mismatch: " + field_.to_string() + " vs " +
                        o.field_.to_string());
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(field_, mod(-std::get<long>(v_), field_.p()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  else
    v_ = mod(std::get<long>(v_) + std::get<long>(o.v_), field_.p());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  else
    v_ = mod(std::get<long>(v_) - std::get<long>(o.v_), field_.p());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  else
    v_ = mod(std::get<long>(v_) * std::get<long>(o.v_), field_.p());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  // Fermat: a^(p-2) mod p.
  long p = field_.p();
  long base = std::get<long>(v_), r = 1;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = mod(r * base, p);
    base = mod(base * base, p);
  }
  return Scalar(field_, r);
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar r = one(field_);
  Scalar base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.v_ == b.v_;
}

long Scalar::residue() const {
  if (!field_.is_prime_field()) throw std::logic_error("residue() on rational scalar");
  return std::get<long>(v_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on prime-field scalar");
  return std::get<mpq_class>(v_);
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(std::get<long>(v_));
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace homalg
