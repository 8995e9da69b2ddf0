#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/ring.hpp"

namespace azinv {

// k[x, x^-1] with lambda(x) = x^-1.
class Laurent final : public Ring {
 public:
  static std::shared_ptr<const Laurent> create(BaseField k);

  Elem monomial(const Scalar& c, long e) const;
  Elem x() const { return monomial(Scalar(base(), 1), 1); }
  // Value at x = c (c nonzero).
  Scalar eval(const Elem& a, const Scalar& c) const;
  // a = x^shift * p(x) with p(0) != 0.
  std::pair<Poly, long> to_poly(const Elem& a) const;
  Elem from_poly(const Poly& p, long shift) const;
  // Monic generator of the ideal (entries), shifted so that its lowest exponent is 0.
  Elem gcd(const std::vector<Elem>& entries) const;
  std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const;
  // c when a = c*x^e.
  std::optional<std::pair<Scalar, long>> as_monomial(const Elem& a) const;

  std::string signature() const override;
  Elem from_scalar(const Scalar& c) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem scale(const Elem& a, const Scalar& c) const override;
  bool is_zero(const Elem& a) const override;
  Elem involution(const Elem& a) const override;
  bool involution_is_trivial() const override { return false; }
  std::string format(const Elem& a) const override;
  std::optional<Elem> try_inverse(const Elem& a, std::string* witness) const override;
  std::optional<Scalar> as_scalar(const Elem& a) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::optional<Elem> nonfixed_generator() const override { return x(); }

  explicit Laurent(BaseField k) : Ring(k) {}

 private:
  const LaurentTerms& terms(const Elem& a) const;
};

using LaurentPtr = std::shared_ptr<const Laurent>;

}  // namespace azinv
