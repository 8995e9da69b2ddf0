#include "exact/tower.hpp"

#include "exact/errors.hpp"
#include "exact/format.hpp"

namespace azinv {

namespace {

bool all_zero(const Coeffs& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Coeffs vadd(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Coeffs vsub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Coeffs vneg(const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(-c);
  return r;
}

Coeffs vscale(const Coeffs& a, const Scalar& s) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c * s);
  return r;
}

std::pair<Coeffs, Coeffs> halves(const Coeffs& a) {
  std::size_t h = a.size() / 2;
  return {Coeffs(a.begin(), a.begin() + static_cast<long>(h)),
          Coeffs(a.begin() + static_cast<long>(h), a.end())};
}

Coeffs join(Coeffs lo, const Coeffs& hi) {
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

TowerPtr Tower::field(BaseField k) { return std::make_shared<const Tower>(k); }

const Coeffs& Tower::check(const Elem& a) const {
  const auto& c = a.as<Coeffs>();
  if (c.size() != dimension()) fail(ErrorCode::kRingMismatch, "element does not belong to " + signature());
  return c;
}

TowerPtr Tower::extend(const Elem& t, int sign) const {
  require_same_ring(*t.ring(), *this);
  if (sign != 1 && sign != -1) fail(ErrorCode::kInvalidArgument, "stage sign must be +1 or -1");
  if (!try_inverse(t, nullptr))
    fail(ErrorCode::kNotInvertible, "adjoined value " + format(t) + " is not a unit (stage not etale)");
  if (!is_zero(add(involution(t), neg(t))))
    fail(ErrorCode::kInvalidArgument, "adjoined value " + format(t) + " is not fixed by the involution");
  auto next = std::make_shared<Tower>(base());
  next->stages_ = stages_;
  bool split = sqrt(t).has_value();
  next->stages_.push_back({check(t), sign, split});
  next->field_ = field_ && !split;
  next->index_monomials();
  return next;
}

TowerPtr Tower::prefix(std::size_t levels) const {
  auto p = std::make_shared<Tower>(base());
  p->stages_.assign(stages_.begin(), stages_.begin() + static_cast<long>(levels));
  p->field_ = true;
  for (const auto& s : p->stages_) p->field_ = p->field_ && !s.split;
  p->index_monomials();
  return p;
}

bool Tower::is_prefix_of(const Tower& other) const {
  if (!(base() == other.base()) || levels() > other.levels()) return false;
  for (std::size_t i = 0; i < levels(); ++i)
    if (stages_[i].t != other.stages_[i].t || stages_[i].sign != other.stages_[i].sign) return false;
  return true;
}

Elem Tower::lift(const Elem& e) const {
  const auto* src = dynamic_cast<const Tower*>(e.ring().get());
  if (!src || !src->is_prefix_of(*this))
    fail(ErrorCode::kRingMismatch, "cannot embed " + e.ring()->signature() + " into " + signature());
  Coeffs c = e.as<Coeffs>();
  c.resize(dimension(), Scalar(base(), 0));
  return Elem(ptr(), std::move(c));
}

Elem Tower::generator(std::size_t i) const {
  Coeffs c(dimension(), Scalar(base(), 0));
  c.at(std::size_t{1} << i) = Scalar(base(), 1);
  return Elem(ptr(), std::move(c));
}

Elem Tower::stage_value(std::size_t i) const {
  Coeffs c = stages_.at(i).t;
  c.resize(dimension(), Scalar(base(), 0));
  return Elem(ptr(), std::move(c));
}

std::string Tower::signature() const {
  std::string s = "tower(" + base().name();
  for (std::size_t i = 0; i < stages_.size(); ++i)
    s += ";r" + std::to_string(i + 1) + "^2=" + prefix(i)->format_coeffs(stages_[i].t) +
         (stages_[i].sign > 0 ? ",fixed" : ",negated");
  return s + ")";
}

Elem Tower::from_scalar(const Scalar& c) const {
  Coeffs v(dimension(), Scalar(base(), 0));
  v[0] = c;
  return Elem(ptr(), std::move(v));
}

Elem Tower::add(const Elem& a, const Elem& b) const { return Elem(ptr(), vadd(check(a), check(b))); }
Elem Tower::neg(const Elem& a) const { return Elem(ptr(), vneg(check(a))); }
Elem Tower::scale(const Elem& a, const Scalar& c) const { return Elem(ptr(), vscale(check(a), c)); }

void Tower::index_monomials() {
  monomials_.clear();
  std::vector<Scalar> t;
  for (const auto& s : stages_) {
    for (std::size_t i = 1; i < s.t.size(); ++i)
      if (!s.t[i].is_zero()) return;
    t.push_back(s.t[0]);
  }
  monomials_.assign(dimension(), Scalar(base(), 1));
  for (std::size_t m = 1; m < dimension(); ++m) {
    std::size_t low = m & (~m + 1);
    std::size_t bit = 0;
    while ((std::size_t{1} << bit) != low) ++bit;
    monomials_[m] = monomials_[m ^ low] * t[bit];
  }
}

Elem Tower::mul(const Elem& a, const Elem& b) const {
  const Coeffs& x = check(a);
  const Coeffs& y = check(b);
  if (!monomials_.empty()) {
    std::vector<std::size_t> sx, sy;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) sx.push_back(i);
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!y[i].is_zero()) sy.push_back(i);
    // schoolbook on the nonzero monomials when it beats the 3^levels of the recursion
    std::size_t karatsuba = 1;
    for (std::size_t i = 0; i < levels(); ++i) karatsuba *= 3;
    if (sx.size() * sy.size() <= karatsuba) {
      Coeffs out(x.size(), Scalar(base(), 0));
      for (std::size_t i : sx)
        for (std::size_t j : sy) {
          Scalar c = x[i] * y[j];
          if (std::size_t common = i & j) c = c * monomials_[common];
          out[i ^ j] += c;
        }
      return Elem(ptr(), std::move(out));
    }
  }
  return Elem(ptr(), mul_rec(x, y, levels()));
}
bool Tower::is_zero(const Elem& a) const { return all_zero(check(a)); }

Coeffs Tower::mul_rec(const Coeffs& a, const Coeffs& b, std::size_t level) const {
  if (level == 0) return {a[0] * b[0]};
  if (all_zero(a) || all_zero(b)) return Coeffs(a.size(), Scalar(base(), 0));
  auto [a0, a1] = halves(a);
  auto [b0, b1] = halves(b);
  bool a1z = all_zero(a1), b1z = all_zero(b1);
  if (a1z && b1z) {
    Coeffs lo = mul_rec(a0, b0, level - 1);
    return join(lo, Coeffs(lo.size(), Scalar(base(), 0)));
  }
  if (a1z) return join(mul_rec(a0, b0, level - 1), mul_rec(a0, b1, level - 1));
  if (b1z) return join(mul_rec(a0, b0, level - 1), mul_rec(a1, b0, level - 1));
  Coeffs p0 = mul_rec(a0, b0, level - 1);
  Coeffs p1 = mul_rec(a1, b1, level - 1);
  Coeffs mid = mul_rec(vadd(a0, a1), vadd(b0, b1), level - 1);
  Coeffs lo = vadd(p0, mul_rec(stages_[level - 1].t, p1, level - 1));
  Coeffs hi = vsub(vsub(mid, p0), p1);
  return join(lo, hi);
}

Elem Tower::involution(const Elem& a) const {
  std::size_t negated = 0;
  for (std::size_t i = 0; i < levels(); ++i)
    if (stages_[i].sign < 0) negated |= std::size_t{1} << i;
  Coeffs out = check(a);
  if (negated)
    for (std::size_t m = 0; m < out.size(); ++m)
      if (__builtin_popcountl(m & negated) % 2 && !out[m].is_zero()) out[m] = -out[m];
  return Elem(ptr(), std::move(out));
}

bool Tower::involution_is_trivial() const {
  for (const auto& s : stages_)
    if (s.sign < 0) return false;
  return true;
}

Coeffs Tower::inv_rec(const Coeffs& a, std::size_t level) const {
  if (level == 0) {
    if (a[0].is_zero()) return {};
    return {a[0].inverse()};
  }
  auto [a0, a1] = halves(a);
  if (all_zero(a1)) {
    Coeffs i0 = inv_rec(a0, level - 1);
    if (i0.empty()) return {};
    return join(i0, Coeffs(i0.size(), Scalar(base(), 0)));
  }
  // (a0 + a1 r)(a0 - a1 r) = a0^2 - t a1^2
  Coeffs norm = vsub(mul_rec(a0, a0, level - 1),
                     mul_rec(stages_[level - 1].t, mul_rec(a1, a1, level - 1), level - 1));
  Coeffs ninv = inv_rec(norm, level - 1);
  if (ninv.empty()) return {};
  return join(mul_rec(a0, ninv, level - 1), vneg(mul_rec(a1, ninv, level - 1)));
}

std::optional<Elem> Tower::try_inverse(const Elem& a, std::string* witness) const {
  if (auto c = as_scalar(a); c && !c->is_zero()) return from_scalar(c->inverse());
  Coeffs inv = inv_rec(check(a), levels());
  if (!inv.empty()) return Elem(ptr(), std::move(inv));
  if (witness) *witness = is_zero(a) ? "1" : regular_kernel_witness(a);
  return std::nullopt;
}

std::optional<Scalar> Tower::as_scalar(const Elem& a) const {
  const auto& c = check(a);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return std::nullopt;
  return c[0];
}

std::optional<Coeffs> Tower::sqrt_rec(const Coeffs& a, std::size_t level) const {
  if (level == 0) {
    auto s = a[0].sqrt();
    if (!s) return std::nullopt;
    return Coeffs{*s};
  }
  const Coeffs& t = stages_[level - 1].t;
  auto [a0, a1] = halves(a);
  Coeffs zero(a0.size(), Scalar(base(), 0));
  if (all_zero(a1)) {
    if (auto z = sqrt_rec(a0, level - 1)) return join(*z, zero);
    Coeffs tinv = inv_rec(t, level - 1);
    if (auto w = sqrt_rec(mul_rec(a0, tinv, level - 1), level - 1)) return join(zero, *w);
    return std::nullopt;
  }
  // (u + v r)^2 = u^2 + t v^2 + 2uv r
  Coeffs norm = vsub(mul_rec(a0, a0, level - 1), mul_rec(t, mul_rec(a1, a1, level - 1), level - 1));
  auto m = sqrt_rec(norm, level - 1);
  if (!m) return std::nullopt;
  Scalar half = Scalar(base(), 2).inverse();
  for (int sgn : {1, -1}) {
    Coeffs u2 = vscale(sgn > 0 ? vadd(a0, *m) : vsub(a0, *m), half);
    auto u = sqrt_rec(u2, level - 1);
    if (!u) continue;
    Coeffs uinv = inv_rec(*u, level - 1);
    if (uinv.empty()) continue;
    Coeffs v = vscale(mul_rec(a1, uinv, level - 1), half);
    Coeffs cand = join(*u, v);
    if (mul_rec(cand, cand, level) == a) return cand;
  }
  return std::nullopt;
}

std::optional<Elem> Tower::sqrt(const Elem& a) const {
  auto r = sqrt_rec(check(a), levels());
  if (!r) return std::nullopt;
  return Elem(ptr(), std::move(*r));
}

Coeffs Tower::coordinates(const Elem& a) const { return check(a); }

Elem Tower::from_coordinates(const Coeffs& c) const {
  if (c.size() != dimension()) fail(ErrorCode::kInvalidArgument, "wrong coordinate count for " + signature());
  return Elem(ptr(), c);
}

std::optional<Elem> Tower::symbol(std::string_view name) const {
  if (name.size() < 2 || name[0] != 'r') return std::nullopt;
  std::size_t idx = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(ch - '0');
    if (idx > 64) return std::nullopt;
  }
  if (idx == 0 || idx > levels()) return std::nullopt;
  return generator(idx - 1);
}

std::string Tower::format_coeffs(const Coeffs& c) const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    std::string mono;
    for (std::size_t i = 0; (std::size_t{1} << i) <= mask; ++i)
      if (mask & (std::size_t{1} << i)) mono += (mono.empty() ? "r" : "*r") + std::to_string(i + 1);
    terms.emplace_back(c[mask], mono);
  }
  return format_terms(terms);
}

std::string Tower::format(const Elem& a) const { return format_coeffs(check(a)); }

}  // namespace azinv
