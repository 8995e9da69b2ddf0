#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exact/scalar.hpp"

namespace azinv {

// Dense univariate polynomial over k, coefficients low to high, no trailing zeros.
class Poly {
 public:
  explicit Poly(BaseField k = {}) : k_(k) {}
  Poly(BaseField k, std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);

  const BaseField& field() const { return k_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(k_, 0); }
  Scalar leading() const { return c_.empty() ? Scalar(k_, 0) : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& s) const;

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  Scalar eval(const Scalar& x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  BaseField k_;
  std::vector<Scalar> c_;
};

Poly gcd(Poly a, Poly b);

}  // namespace azinv
