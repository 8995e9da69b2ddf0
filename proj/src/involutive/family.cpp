#include "involutive/family.hpp"

#include "exact/errors.hpp"
#include "exact/linalg.hpp"

namespace azinv {

namespace {

// D = c^2 * m with m as small as trial division finds; returns (c, m).
std::pair<Scalar, Scalar> strip_squares(const Scalar& d) {
  const BaseField& k = d.field();
  if (!k.is_rational()) return {Scalar(k, 1), d};
  mpz_class n = d.value().get_num() * d.value().get_den();
  mpz_class c = 1;
  for (unsigned long p = 2; p < 10000; ++p) {
    mpz_class pp = p * p;
    if (pp > abs(n)) break;
    while (n % pp == 0) {
      n /= pp;
      c *= p;
    }
  }
  mpz_class an = abs(n);
  if (an > 1 && mpz_perfect_square_p(an.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), an.get_mpz_t());
    c *= r;
    n /= r * r;
  }
  return {Scalar(k, mpq_class(c, d.value().get_den())), Scalar(k, mpq_class(n))};
}

}  // namespace

FamilyPtr Family::trivial(BaseField k) { return std::make_shared<Family>(FamilyKind::kTrivialField, Tower::field(k)); }

FamilyPtr Family::tower(const TowerPtr& t) {
  if (!t->is_field()) fail(ErrorCode::kInvalidArgument, t->signature() + " is not a field");
  if (t->involution_is_trivial()) return std::make_shared<Family>(FamilyKind::kTrivialField, t);
  return std::make_shared<Family>(FamilyKind::kQuadraticEtale, t);
}

FamilyPtr Family::quadratic(BaseField k, const Scalar& alpha, const Scalar& beta) {
  Scalar disc = alpha * alpha - Scalar(k, 4) * beta;
  if (disc.is_zero())
    fail(ErrorCode::kInvalidArgument, "x^2 - (" + alpha.to_string() + ")x + (" + beta.to_string() +
                                          ") is not etale: discriminant 0");
  Scalar half = Scalar(k, 2).inverse();
  std::shared_ptr<Family> f;
  if (auto s = disc.sqrt()) {
    auto alg = FiniteAlgebra::swap(FiniteAlgebra::field(k));
    f = std::make_shared<Family>(FamilyKind::kQuadraticEtale, alg);
    auto field = alg->left();
    f->root_ = alg->from_factors(field->from_scalar((alpha + *s) * half), field->from_scalar((alpha - *s) * half));
    f->split_ = true;
  } else {
    auto [c, m] = strip_squares(disc);
    auto t = Tower::field(k)->extend(Tower::field(k)->from_scalar(m), -1);
    f = std::make_shared<Family>(FamilyKind::kQuadraticEtale, t);
    f->root_ = (t->from_scalar(alpha) + t->generator(0).scaled(c)).scaled(half);
  }
  f->alpha_beta_ = std::make_pair(alpha, beta);
  return f;
}

FamilyPtr Family::quadratic_sqrt(BaseField k, const Scalar& d) {
  return quadratic(k, Scalar(k, 0), -d);
}

FamilyPtr Family::finite(const AlgebraPtr& a) {
  return std::make_shared<Family>(FamilyKind::kFiniteAlgebra, a);
}

FamilyPtr Family::laurent(BaseField k) { return std::make_shared<Family>(FamilyKind::kLaurent, Laurent::create(k)); }

FamilyPtr Family::hyperelliptic(BaseField k, std::vector<Scalar> roots, bool complete) {
  auto ring = Hyperelliptic::create(k, std::move(roots));
  auto f = std::make_shared<Family>(FamilyKind::kHyperelliptic, ring);
  f->genus_ = ring->genus();
  f->complete_ = complete;
  return f;
}

std::string Family::name() const {
  switch (kind_) {
    case FamilyKind::kTrivialField: return "trivial";
    case FamilyKind::kQuadraticEtale: return "quadratic";
    case FamilyKind::kFiniteAlgebra: return "finite";
    case FamilyKind::kLaurent: return "laurent";
    case FamilyKind::kHyperelliptic: return "hyperelliptic";
  }
  return "unknown";
}

std::string Family::describe() const {
  switch (kind_) {
    case FamilyKind::kTrivialField: return ring_->signature() + " with trivial involution";
    case FamilyKind::kQuadraticEtale: {
      std::string s = ring_->signature();
      if (alpha_beta_)
        s += ", x^2 - (" + alpha_beta_->first.to_string() + ")*x + (" + alpha_beta_->second.to_string() +
             ") with x = " + root_->to_string();
      return s;
    }
    case FamilyKind::kFiniteAlgebra: return ring_->signature();
    case FamilyKind::kLaurent: return base().name() + "[x, x^-1] with x -> x^-1";
    case FamilyKind::kHyperelliptic:
      return hyperelliptic_ring()->signature() + ", genus " + std::to_string(genus_) +
             (complete_ ? ", complete model" : ", affine model");
  }
  return ring_->signature();
}

std::shared_ptr<const Laurent> Family::laurent_ring() const {
  return std::dynamic_pointer_cast<const Laurent>(ring_);
}

std::shared_ptr<const Hyperelliptic> Family::hyperelliptic_ring() const {
  return std::dynamic_pointer_cast<const Hyperelliptic>(ring_);
}

std::shared_ptr<const Tower> Family::tower_ring() const { return std::dynamic_pointer_cast<const Tower>(ring_); }

std::shared_ptr<const FiniteAlgebra> Family::algebra() const {
  if (auto a = std::dynamic_pointer_cast<const FiniteAlgebra>(ring_)) return a;
  if (auto t = tower_ring()) return FiniteAlgebra::from_tower(*t);
  fail(ErrorCode::kUnsupported, describe() + " is not finite-dimensional");
}

std::vector<Elem> fixed_basis(const Ring& r) {
  std::size_t d = r.dimension();
  if (d == 0) fail(ErrorCode::kUnsupported, r.signature() + " is not finite-dimensional");
  ScalarMatrix m(r.base(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Coeffs c = r.coordinates(r.add(r.involution(r.basis(j)), r.neg(r.basis(j))));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
  }
  std::vector<Elem> out;
  for (const auto& v : span_basis(r.base(), d, m.kernel())) out.push_back(r.from_coordinates(v));
  return out;
}

FixedSubring fixed_subring(const Family& f) {
  FixedSubring s;
  switch (f.kind()) {
    case FamilyKind::kLaurent:
      s.description = f.base().name() + "[x + x^-1]";
      return s;
    case FamilyKind::kHyperelliptic:
      s.description = f.base().name() + "[x]";
      return s;
    default: break;
  }
  s.finite = true;
  s.basis = fixed_basis(*f.ring());
  std::string desc = "span{";
  for (std::size_t i = 0; i < s.basis.size(); ++i) desc += (i ? ", " : "") + s.basis[i].to_string();
  s.description = desc + "}";
  return s;
}

NormOneElement::NormOneElement(Elem r) : r_(std::move(r)) {
  if (!r_.ring()) fail(ErrorCode::kInvalidArgument, "uninitialised element");
  Elem n = r_.lambda() * r_;
  if (!n.is_one()) fail(ErrorCode::kNotNormOne, "lambda(r)*r = " + n.to_string() + " for r = " + r_.to_string());
}

}  // namespace azinv
