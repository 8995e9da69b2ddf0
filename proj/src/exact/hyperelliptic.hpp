#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/ring.hpp"

namespace azinv {

// k[x, y]/(y^2 - f(x)) with f = prod (x - a_i) squarefree of odd degree, lambda(y) = -y.
// Units are the nonzero constants.
class Hyperelliptic final : public Ring {
 public:
  static std::shared_ptr<const Hyperelliptic> create(BaseField k, std::vector<Scalar> roots);

  const std::vector<Scalar>& roots() const { return roots_; }
  const Poly& f() const { return f_; }
  std::size_t genus() const { return (roots_.size() - 1) / 2; }
  Elem make(Poly p, Poly q) const;
  // Value at the ramification point (a, 0).
  Scalar eval_at_root(const Elem& e, const Scalar& a) const;
  Poly norm(const Elem& e) const;  // p^2 - f q^2

  std::string signature() const override;
  Elem from_scalar(const Scalar& c) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  bool is_zero(const Elem& a) const override;
  Elem involution(const Elem& a) const override;
  bool involution_is_trivial() const override { return false; }
  std::string format(const Elem& a) const override;
  std::optional<Elem> try_inverse(const Elem& a, std::string* witness) const override;
  std::optional<Scalar> as_scalar(const Elem& a) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::optional<Elem> nonfixed_generator() const override;

  Hyperelliptic(BaseField k, std::vector<Scalar> roots, Poly f)
      : Ring(k), roots_(std::move(roots)), f_(std::move(f)) {}

 private:
  const HypTerms& terms(const Elem& a) const;
  std::vector<Scalar> roots_;
  Poly f_;
};

using HyperellipticPtr = std::shared_ptr<const Hyperelliptic>;

}  // namespace azinv
