#include "exact/hyperelliptic.hpp"

#include <set>

#include "exact/errors.hpp"
#include "exact/format.hpp"

namespace azinv {

HyperellipticPtr Hyperelliptic::create(BaseField k, std::vector<Scalar> roots) {
  if (roots.size() % 2 == 0)
    fail(ErrorCode::kInvalidArgument, "need an odd number 2g+1 of roots, got " + std::to_string(roots.size()));
  std::set<Scalar> seen;
  Poly f = Poly::constant(Scalar(k, 1));
  for (const auto& a : roots) {
    if (!(a.field() == k)) fail(ErrorCode::kRingMismatch, "root outside " + k.name());
    if (!seen.insert(a).second) fail(ErrorCode::kInvalidArgument, "roots must be distinct, " + a.to_string() + " repeats");
    f = f * Poly(k, {-a, Scalar(k, 1)});
  }
  return std::make_shared<const Hyperelliptic>(k, std::move(roots), std::move(f));
}

const HypTerms& Hyperelliptic::terms(const Elem& a) const {
  if (!std::holds_alternative<HypTerms>(a.data()))
    fail(ErrorCode::kRingMismatch, "element does not belong to " + signature());
  return a.as<HypTerms>();
}

Elem Hyperelliptic::make(Poly p, Poly q) const { return Elem(ptr(), HypTerms{std::move(p), std::move(q)}); }

std::string Hyperelliptic::signature() const {
  return "hyperelliptic(" + base().name() + ";y^2=" + f_.to_string() + ")";
}

Elem Hyperelliptic::from_scalar(const Scalar& c) const { return make(Poly::constant(c), Poly(base())); }

Elem Hyperelliptic::add(const Elem& a, const Elem& b) const {
  const auto& x = terms(a);
  const auto& y = terms(b);
  return make(x.p + y.p, x.q + y.q);
}

Elem Hyperelliptic::neg(const Elem& a) const {
  const auto& x = terms(a);
  return make(-x.p, -x.q);
}

Elem Hyperelliptic::mul(const Elem& a, const Elem& b) const {
  const auto& x = terms(a);
  const auto& y = terms(b);
  return make(x.p * y.p + f_ * x.q * y.q, x.p * y.q + x.q * y.p);
}

bool Hyperelliptic::is_zero(const Elem& a) const {
  const auto& x = terms(a);
  return x.p.is_zero() && x.q.is_zero();
}

Elem Hyperelliptic::involution(const Elem& a) const {
  const auto& x = terms(a);
  return make(x.p, -x.q);
}

std::string Hyperelliptic::format(const Elem& a) const {
  const auto& x = terms(a);
  std::vector<std::pair<Scalar, std::string>> out;
  for (long i = x.p.degree(); i >= 0; --i)
    out.emplace_back(x.p.coeff(static_cast<std::size_t>(i)), i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (long i = x.q.degree(); i >= 0; --i)
    out.emplace_back(x.q.coeff(static_cast<std::size_t>(i)),
                     i == 0 ? "y" : (i == 1 ? "x*y" : "x^" + std::to_string(i) + "*y"));
  return format_terms(out);
}

Poly Hyperelliptic::norm(const Elem& e) const {
  const auto& x = terms(e);
  return x.p * x.p - f_ * x.q * x.q;
}

std::optional<Elem> Hyperelliptic::try_inverse(const Elem& a, std::string* witness) const {
  const auto& x = terms(a);
  if (x.q.is_zero() && x.p.degree() == 0) return from_scalar(x.p.coeff(0).inverse());
  if (witness) *witness = "norm " + norm(a).to_string() + " is not a nonzero constant";
  return std::nullopt;
}

std::optional<Scalar> Hyperelliptic::as_scalar(const Elem& a) const {
  const auto& x = terms(a);
  if (!x.q.is_zero() || x.p.degree() > 0) return std::nullopt;
  return x.p.coeff(0);
}

std::optional<Elem> Hyperelliptic::symbol(std::string_view name) const {
  if (name == "x") return make(Poly::monomial(Scalar(base(), 1), 1), Poly(base()));
  if (name == "y") return make(Poly(base()), Poly::constant(Scalar(base(), 1)));
  return std::nullopt;
}

std::optional<Elem> Hyperelliptic::nonfixed_generator() const { return symbol("y"); }

Scalar Hyperelliptic::eval_at_root(const Elem& e, const Scalar& a) const { return terms(e).p.eval(a); }

}  // namespace azinv
