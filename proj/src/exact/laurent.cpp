#include "exact/laurent.hpp"

#include "exact/errors.hpp"
#include "exact/format.hpp"

namespace azinv {

LaurentPtr Laurent::create(BaseField k) { return std::make_shared<const Laurent>(k); }

const LaurentTerms& Laurent::terms(const Elem& a) const {
  if (!std::holds_alternative<LaurentTerms>(a.data()))
    fail(ErrorCode::kRingMismatch, "element does not belong to " + signature());
  return a.as<LaurentTerms>();
}

std::string Laurent::signature() const { return "laurent(" + base().name() + ")"; }

Elem Laurent::monomial(const Scalar& c, long e) const {
  LaurentTerms t;
  if (!c.is_zero()) t.emplace(e, c);
  return Elem(ptr(), std::move(t));
}

Elem Laurent::from_scalar(const Scalar& c) const { return monomial(c, 0); }

Elem Laurent::add(const Elem& a, const Elem& b) const {
  LaurentTerms r = terms(a);
  for (const auto& [e, c] : terms(b)) {
    auto it = r.find(e);
    if (it == r.end()) {
      r.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return Elem(ptr(), std::move(r));
}

Elem Laurent::neg(const Elem& a) const {
  LaurentTerms r = terms(a);
  for (auto& [e, c] : r) c = -c;
  return Elem(ptr(), std::move(r));
}

Elem Laurent::scale(const Elem& a, const Scalar& s) const {
  if (s.is_zero()) return zero();
  LaurentTerms r = terms(a);
  for (auto& [e, c] : r) c *= s;
  return Elem(ptr(), std::move(r));
}

Elem Laurent::mul(const Elem& a, const Elem& b) const {
  LaurentTerms r;
  for (const auto& [e1, c1] : terms(a))
    for (const auto& [e2, c2] : terms(b)) {
      auto [it, fresh] = r.emplace(e1 + e2, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return Elem(ptr(), std::move(r));
}

bool Laurent::is_zero(const Elem& a) const { return terms(a).empty(); }

Elem Laurent::involution(const Elem& a) const {
  LaurentTerms r;
  for (const auto& [e, c] : terms(a)) r.emplace(-e, c);
  return Elem(ptr(), std::move(r));
}

std::string Laurent::format(const Elem& a) const {
  std::vector<std::pair<Scalar, std::string>> out;
  const auto& t = terms(a);
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    long e = it->first;
    out.emplace_back(it->second, e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e)));
  }
  return format_terms(out);
}

std::optional<std::pair<Scalar, long>> Laurent::as_monomial(const Elem& a) const {
  const auto& t = terms(a);
  if (t.size() != 1) return std::nullopt;
  return std::make_pair(t.begin()->second, t.begin()->first);
}

std::optional<Elem> Laurent::try_inverse(const Elem& a, std::string* witness) const {
  if (auto m = as_monomial(a)) return monomial(m->first.inverse(), -m->second);
  if (witness) {
    std::string s = "support {";
    bool first = true;
    for (auto it = terms(a).rbegin(); it != terms(a).rend(); ++it) {
      s += (first ? "" : ", ") + std::to_string(it->first);
      first = false;
    }
    *witness = s + "}";
  }
  return std::nullopt;
}

std::optional<Scalar> Laurent::as_scalar(const Elem& a) const {
  const auto& t = terms(a);
  if (t.empty()) return Scalar(base(), 0);
  if (t.size() == 1 && t.begin()->first == 0) return t.begin()->second;
  return std::nullopt;
}

std::optional<Elem> Laurent::symbol(std::string_view name) const {
  if (name == "x") return x();
  return std::nullopt;
}

Scalar Laurent::eval(const Elem& a, const Scalar& c) const {
  Scalar r(base(), 0);
  for (const auto& [e, v] : terms(a)) r += v * c.pow(e);
  return r;
}

std::pair<Poly, long> Laurent::to_poly(const Elem& a) const {
  const auto& t = terms(a);
  if (t.empty()) return {Poly(base()), 0};
  long lo = t.begin()->first, hi = t.rbegin()->first;
  std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1), Scalar(base(), 0));
  for (const auto& [e, v] : t) c[static_cast<std::size_t>(e - lo)] = v;
  return {Poly(base(), std::move(c)), lo};
}

Elem Laurent::from_poly(const Poly& p, long shift) const {
  LaurentTerms t;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeffs()[i].is_zero()) t.emplace(static_cast<long>(i) + shift, p.coeffs()[i]);
  return Elem(ptr(), std::move(t));
}

Elem Laurent::gcd(const std::vector<Elem>& entries) const {
  Poly g(base());
  for (const auto& e : entries) {
    if (e.is_zero()) continue;
    g = azinv::gcd(g, to_poly(e).first);
  }
  return from_poly(g, 0);
}

std::optional<Elem> Laurent::divide_exact(const Elem& a, const Elem& b) const {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return zero();
  auto [pa, sa] = to_poly(a);
  auto [pb, sb] = to_poly(b);
  auto [q, r] = pa.divmod(pb);
  if (!r.is_zero()) return std::nullopt;
  return from_poly(q, sa - sb);
}

}  // namespace azinv
