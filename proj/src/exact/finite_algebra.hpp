#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/linalg.hpp"
#include "exact/ring.hpp"
#include "exact/tower.hpp"

namespace azinv {

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// A surjection onto a field, given by the images of the basis elements.
struct QuotientMap {
  TowerPtr target;
  std::vector<Elem> images;
  Elem apply(const Coeffs& coords) const;
};

// Commutative k-algebra with involution given by structure constants, usually built from
// a constructor tree so that its maximal ideals can be found by square detection alone.
class FiniteAlgebra final : public Ring {
 public:
  enum class Kind { kField, kProduct, kSwap, kSqrt, kThicken, kTable };

  static AlgebraPtr field(BaseField k);
  static AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b);
  // A x A with (a, b) -> (lambda b, lambda a).
  static AlgebraPtr swap(const AlgebraPtr& a);
  // A[T]/(T^2 - s), lambda(T) = sign*T; s must be lambda-fixed.
  static AlgebraPtr adjoin_sqrt(const AlgebraPtr& a, const Elem& s, int sign);
  // A[T]/(T^2), lambda(T) = sign*T.
  static AlgebraPtr thicken(const AlgebraPtr& a, int sign);
  // table[i][j] = coordinates of e_i*e_j; involution column j = coordinates of lambda(e_j).
  static AlgebraPtr from_table(BaseField k, std::vector<std::vector<Coeffs>> table, Coeffs unity,
                               ScalarMatrix involution);
  static AlgebraPtr from_tower(const Tower& t);

  Kind kind() const { return kind_; }
  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  const Coeffs& sqrt_value() const { return s_; }
  int sign() const { return sign_; }
  const std::vector<std::vector<Coeffs>>& table() const { return table_; }
  const Coeffs& unity() const { return unity_; }
  const ScalarMatrix& involution_matrix() const { return lambda_; }

  // Exhaustive for dimension <= 6, seeded sample of triples above.
  void validate() const;
  ScalarMatrix regular_matrix(const Elem& a) const;

  std::vector<Coeffs> radical() const;
  std::vector<Coeffs> radical_from_quotients() const;
  std::vector<QuotientMap> maximal_ideals() const;
  // Canonical basis of ker(q).
  std::vector<Coeffs> ideal_of(const QuotientMap& q) const;

  std::string signature() const override;
  Elem from_scalar(const Scalar& c) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem scale(const Elem& a, const Scalar& c) const override;
  bool is_zero(const Elem& a) const override;
  Elem involution(const Elem& a) const override;
  bool involution_is_trivial() const override;
  std::string format(const Elem& a) const override;
  std::optional<Elem> try_inverse(const Elem& a, std::string* witness) const override;
  std::optional<Scalar> as_scalar(const Elem& a) const override;
  bool is_field() const override;
  std::size_t dimension() const override { return unity_.size(); }
  Coeffs coordinates(const Elem& a) const override;
  Elem from_coordinates(const Coeffs& c) const override;
  std::optional<Elem> symbol(std::string_view name) const override;
  std::optional<std::pair<RingPtr, RingPtr>> product_factors() const override;
  Elem from_factors(const Elem& a, const Elem& b) const override;

  explicit FiniteAlgebra(BaseField k) : Ring(k), lambda_(k, 0, 0) {}

 private:
  const Coeffs& check(const Elem& a) const;
  std::string format_coeffs(const Coeffs& c) const;
  Coeffs mul_coeffs(const Coeffs& a, const Coeffs& b) const;

  Kind kind_ = Kind::kTable;
  AlgebraPtr left_, right_;
  Coeffs s_;
  int sign_ = 1;
  std::vector<std::vector<Coeffs>> table_;
  Coeffs unity_;
  ScalarMatrix lambda_;
};

}  // namespace azinv
