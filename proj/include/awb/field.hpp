#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "awb/errors.hpp"

namespace awb {

/// Ground field descriptor: the rationals, or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);  // checks primality

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t prime() const { return p_; }  // 0 means rationals

  friend bool operator==(const Field&, const Field&) = default;

  std::string str() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact field element: reduced fraction over Q, or residue in [0, p).
/// Scalars of distinct fields never combine (FieldMismatchError).
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long v);
  static Scalar of_rational(const Field& f, const mpq_class& q);  // reduces mod p when prime
  /// Accepts "a", "-a" or "a/b" in base 10.
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;
  Scalar inv() const;  // throws std::domain_error on zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inv(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "a/b" with b > 1, otherwise "a".
  std::string str() const;

  const mpq_class& rat() const { return std::get<mpq_class>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }

 private:
  Scalar(const Field& f, std::int64_t r) : field_(f), value_(r) {}
  Scalar(const Field& f, mpq_class q) : field_(f), value_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::variant<std::int64_t, mpq_class> value_;
};

}  // namespace awb
