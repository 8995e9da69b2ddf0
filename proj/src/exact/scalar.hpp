#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace azinv {

// The base field k: Q (modulus 0) or F_p for an odd prime p.
class BaseField {
 public:
  BaseField() = default;
  static BaseField rationals() { return BaseField(); }
  static BaseField prime(unsigned long p);
  static BaseField parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  unsigned long modulus() const { return p_; }
  std::string name() const;

  bool operator==(const BaseField& o) const { return p_ == o.p_; }

 private:
  explicit BaseField(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(const BaseField& k, long v);
  Scalar(const BaseField& k, const mpq_class& v);

  const BaseField& field() const { return k_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Throws NotInvertible on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar pow(long e) const;

  // Square root in k if one exists: perfect squares over Q, Tonelli-Shanks over F_p.
  std::optional<Scalar> sqrt() const;

  bool operator==(const Scalar& o) const { return k_ == o.k_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used only for canonical containers.
  bool operator<(const Scalar& o) const { return cmp(v_, o.v_) < 0; }

  std::string to_string() const;

 private:
  void reduce();
  BaseField k_;
  mpq_class v_;
};

}  // namespace azinv
