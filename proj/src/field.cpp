#include "awb/field.hpp"

#include <stdexcept>

namespace awb {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// value normalized to [0, p)
std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// extended Euclid; a in [1, p)
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return mod_norm(t, p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    throw std::invalid_argument("prime field characteristic must be < 2^31");
  if (!is_prime_u32(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  if (f.is_rational()) return Scalar(f, mpq_class(0));
  return Scalar(f, std::int64_t{0});
}

Scalar Scalar::one(const Field& f) {
  if (f.is_rational()) return Scalar(f, mpq_class(1));
  return Scalar(f, std::int64_t{1});
}

Scalar Scalar::of_int(const Field& f, long long v) {
  if (f.is_rational()) {
    mpq_class q;
    q = mpz_class(std::to_string(v));
    return Scalar(f, q);
  }
  return Scalar(f, mod_norm(v, f.prime()));
}

Scalar Scalar::of_rational(const Field& f, const mpq_class& q) {
  mpq_class c = q;
  if (c.get_den() == 0) throw std::domain_error("zero denominator");
  c.canonicalize();
  if (f.is_rational()) return Scalar(f, c);
  // reduce a/b mod p; b must be invertible
  mpz_class p(static_cast<unsigned long>(f.prime()));
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
  std::int64_t n = mod_norm(num.get_si(), f.prime());
  std::int64_t d = mod_norm(den.get_si(), f.prime());
  return Scalar(f, mod_norm(n * mod_inv(d, f.prime()), f.prime()));
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return of_rational(f, q);
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse scalar value '" + s + "'");
  } catch (const std::domain_error&) {
    throw ParseError("cannot parse scalar value '" + s + "'");
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return rat() == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rat() == 1;
  return residue() == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatchError("scalars from " + field_.str() + " and " + o.field_.str() +
                             " cannot combine");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) += o.rat();
  else
    value_ = mod_norm(residue() + o.residue(), field_.prime());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) -= o.rat();
  else
    value_ = mod_norm(residue() - o.residue(), field_.prime());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) *= o.rat();
  else
    value_ = mod_norm(residue() * o.residue(), field_.prime());  // p < 2^31 keeps this in range
  return *this;
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rat()));
  return Scalar(field_, mod_norm(-residue(), field_.prime()));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rat()));
  return Scalar(field_, mod_inv(residue(), field_.prime()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_rational()) return a.rat() == b.rat();
  return a.residue() == b.residue();
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat().get_str();
  return std::to_string(residue());
}

}  // namespace awb
