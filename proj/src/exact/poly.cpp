#include "exact/poly.hpp"

#include "exact/errors.hpp"

namespace azinv {

Poly::Poly(BaseField k, std::vector<Scalar> coeffs) : k_(k), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar(c.field(), 0));
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(k_, 0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(k_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(k_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(k_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(k_, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(k_, std::move(r));
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return Poly(k_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(ErrorCode::kNotInvertible, "polynomial division by zero");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(k_), r};
  std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), Scalar(k_, 0));
  Scalar lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    Scalar f = r.leading() * lead_inv;
    q[shift] = f;
    std::vector<Scalar> rc = r.c_;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rc[shift + j] -= f * d.c_[j];
    rc.pop_back();
    r = Poly(k_, std::move(rc));
  }
  return {Poly(k_, std::move(q)), r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r(k_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = k_.is_rational() && sgn(c.value()) < 0;
    if (neg) cs = (-c).to_string();
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace azinv
