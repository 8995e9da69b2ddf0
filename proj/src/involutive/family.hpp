#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/finite_algebra.hpp"
#include "exact/hyperelliptic.hpp"
#include "exact/laurent.hpp"
#include "exact/ring.hpp"
#include "exact/tower.hpp"

namespace azinv {

enum class FamilyKind { kTrivialField, kQuadraticEtale, kFiniteAlgebra, kLaurent, kHyperelliptic };

// A ring with involution from one of the supported families.
class Family {
 public:
  static std::shared_ptr<const Family> trivial(BaseField k);
  // A field tower; the family is TrivialField if every stage is fixed, QuadraticEtale otherwise.
  static std::shared_ptr<const Family> tower(const TowerPtr& t);
  // S[x]/(x^2 - alpha x + beta) over S = k; needs alpha^2 - 4 beta != 0.
  static std::shared_ptr<const Family> quadratic(BaseField k, const Scalar& alpha, const Scalar& beta);
  static std::shared_ptr<const Family> quadratic_sqrt(BaseField k, const Scalar& d);
  static std::shared_ptr<const Family> finite(const AlgebraPtr& a);
  static std::shared_ptr<const Family> laurent(BaseField k);
  static std::shared_ptr<const Family> hyperelliptic(BaseField k, std::vector<Scalar> roots, bool complete);

  FamilyKind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const BaseField& base() const { return ring_->base(); }
  std::string name() const;
  std::string describe() const;

  // Quadratic presentations: the image of x and the presentation data.
  const std::optional<Elem>& presentation_root() const { return root_; }
  const std::optional<std::pair<Scalar, Scalar>>& presentation() const { return alpha_beta_; }
  bool split() const { return split_; }

  // Hyperelliptic data.
  std::size_t genus() const { return genus_; }
  bool complete() const { return complete_; }

  std::shared_ptr<const Laurent> laurent_ring() const;
  std::shared_ptr<const Hyperelliptic> hyperelliptic_ring() const;
  std::shared_ptr<const Tower> tower_ring() const;  // null unless the ring is a Tower
  std::shared_ptr<const FiniteAlgebra> algebra() const;  // finite-dimensional rings as algebras

  Family(FamilyKind kind, RingPtr ring) : kind_(kind), ring_(std::move(ring)) {}

 private:
  FamilyKind kind_;
  RingPtr ring_;
  std::optional<Elem> root_;
  std::optional<std::pair<Scalar, Scalar>> alpha_beta_;
  bool split_ = false;
  std::size_t genus_ = 0;
  bool complete_ = false;
};

using FamilyPtr = std::shared_ptr<const Family>;

struct FixedSubring {
  bool finite = false;
  std::vector<Elem> basis;  // finite-dimensional case: basis of ker(lambda - id)
  std::string description;
};

FixedSubring fixed_subring(const Family& f);
std::vector<Elem> fixed_basis(const Ring& r);

// r with lambda(r)*r = 1 (checked).
class NormOneElement {
 public:
  explicit NormOneElement(Elem r);
  const Elem& value() const { return r_; }

 private:
  Elem r_;
};

}  // namespace azinv
