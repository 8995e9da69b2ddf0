#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/ring.hpp"

namespace azinv {

// k[r1][r2]...[rl] with r_i^2 = t_i, t_i a unit of the previous stage fixed by lambda,
// and lambda(r_i) = sign_i * r_i. Coordinates are indexed by square-free monomial masks.
class Tower final : public Ring {
 public:
  struct Stage {
    Coeffs t;  // coordinates in the previous stage
    int sign;
    bool split;  // t_i already a square in the previous stage
  };

  static std::shared_ptr<const Tower> field(BaseField k);
  // Appends a stage adjoining a square root of t (an element of this tower).
  std::shared_ptr<const Tower> extend(const Elem& t, int sign) const;
  std::shared_ptr<const Tower> prefix(std::size_t levels) const;

  std::size_t levels() const { return stages_.size(); }
  const std::vector<Stage>& stages() const { return stages_; }
  Elem generator(std::size_t i) const;  // r_{i+1}
  Elem stage_value(std::size_t i) const;  // t_{i+1} embedded in this tower
  // Image of an element of a prefix tower.
  Elem lift(const Elem& e) const;
  bool is_prefix_of(const Tower& other) const;

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
  bool is_field() const override { return field_; }
  std::optional<Elem> sqrt(const Elem& a) const override;
  std::size_t dimension() const override { return std::size_t{1} << stages_.size(); }
  Coeffs coordinates(const Elem& a) const override;
  Elem from_coordinates(const Coeffs& c) const override;
  std::optional<Elem> symbol(std::string_view name) const override;

  std::string format_coeffs(const Coeffs& c) const;

  explicit Tower(BaseField k) : Ring(k), monomials_{Scalar(k, 1)} {}

 private:
  Coeffs mul_rec(const Coeffs& a, const Coeffs& b, std::size_t level) const;
  Coeffs inv_rec(const Coeffs& a, std::size_t level) const;  // empty if not a unit
  std::optional<Coeffs> sqrt_rec(const Coeffs& a, std::size_t level) const;
  const Coeffs& check(const Elem& a) const;
  void index_monomials();

  std::vector<Stage> stages_;
  // When every t_i lies in k: products of the t_i over each mask, so r_S r_T = monomials_[S & T] r_(S ^ T).
  std::vector<Scalar> monomials_;
  bool field_ = true;
};

using TowerPtr = std::shared_ptr<const Tower>;

}  // namespace azinv
