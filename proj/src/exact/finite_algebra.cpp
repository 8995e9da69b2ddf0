#include "exact/finite_algebra.hpp"

#include <random>

#include "exact/errors.hpp"
#include "exact/format.hpp"

namespace azinv {

namespace {

Coeffs zeros(const BaseField& k, std::size_t n) { return Coeffs(n, Scalar(k, 0)); }

Coeffs padded(const Coeffs& c, std::size_t before, std::size_t total) {
  Coeffs r = zeros(c.empty() ? BaseField() : c.front().field(), total);
  for (std::size_t i = 0; i < c.size(); ++i) r[before + i] = c[i];
  return r;
}

std::shared_ptr<FiniteAlgebra> make(BaseField k) { return std::make_shared<FiniteAlgebra>(k); }

}  // namespace

Elem QuotientMap::apply(const Coeffs& coords) const {
  Elem r = target->zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) r += images[i].scaled(coords[i]);
  return r;
}

AlgebraPtr FiniteAlgebra::field(BaseField k) {
  auto a = make(k);
  a->kind_ = Kind::kField;
  a->table_ = {{{Scalar(k, 1)}}};
  a->unity_ = {Scalar(k, 1)};
  a->lambda_ = ScalarMatrix::identity(k, 1);
  return a;
}

AlgebraPtr FiniteAlgebra::product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->base() == b->base())) fail(ErrorCode::kRingMismatch, "factors over different base fields");
  BaseField k = a->base();
  std::size_t da = a->dimension(), db = b->dimension(), d = da + db;
  auto r = make(k);
  r->kind_ = Kind::kProduct;
  r->left_ = a;
  r->right_ = b;
  r->table_.assign(d, std::vector<Coeffs>(d, zeros(k, d)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) r->table_[i][j] = padded(a->table_[i][j], 0, d);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) r->table_[da + i][da + j] = padded(b->table_[i][j], da, d);
  r->unity_ = padded(a->unity_, 0, d);
  for (std::size_t i = 0; i < db; ++i) r->unity_[da + i] = b->unity_[i];
  r->lambda_ = ScalarMatrix(k, d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) r->lambda_(i, j) = a->lambda_(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) r->lambda_(da + i, da + j) = b->lambda_(i, j);
  return r;
}

AlgebraPtr FiniteAlgebra::swap(const AlgebraPtr& a) {
  auto p = product(a, a);
  auto r = make(a->base());
  r->kind_ = Kind::kSwap;
  r->left_ = a;
  r->right_ = a;
  r->table_ = p->table_;
  r->unity_ = p->unity_;
  std::size_t da = a->dimension(), d = 2 * da;
  r->lambda_ = ScalarMatrix(a->base(), d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      r->lambda_(da + i, j) = a->lambda_(i, j);
      r->lambda_(i, da + j) = a->lambda_(i, j);
    }
  return r;
}

AlgebraPtr FiniteAlgebra::adjoin_sqrt(const AlgebraPtr& a, const Elem& s, int sign) {
  require_same_ring(*s.ring(), *a);
  if (sign != 1 && sign != -1) fail(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  if (!a->is_zero(a->add(a->involution(s), a->neg(s))))
    fail(ErrorCode::kInvalidArgument, "adjoined square " + a->format(s) + " is not fixed by the involution");
  BaseField k = a->base();
  std::size_t da = a->dimension(), d = 2 * da;
  const Coeffs& sc = s.as<Coeffs>();
  auto r = make(k);
  r->kind_ = Kind::kSqrt;
  r->left_ = a;
  r->s_ = sc;
  r->sign_ = sign;
  r->table_.assign(d, std::vector<Coeffs>(d, zeros(k, d)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Coeffs& p = a->table_[i][j];
      r->table_[i][j] = padded(p, 0, d);
      r->table_[i][da + j] = padded(p, da, d);
      r->table_[da + i][j] = padded(p, da, d);
      r->table_[da + i][da + j] = padded(a->mul_coeffs(p, sc), 0, d);
    }
  r->unity_ = padded(a->unity_, 0, d);
  r->lambda_ = ScalarMatrix(k, d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      r->lambda_(i, j) = a->lambda_(i, j);
      r->lambda_(da + i, da + j) = sign > 0 ? a->lambda_(i, j) : -a->lambda_(i, j);
    }
  return r;
}

AlgebraPtr FiniteAlgebra::thicken(const AlgebraPtr& a, int sign) {
  auto base = adjoin_sqrt(a, a->zero(), sign);
  auto r = make(a->base());
  r->kind_ = Kind::kThicken;
  r->left_ = a;
  r->s_ = base->s_;
  r->sign_ = sign;
  r->table_ = base->table_;
  r->unity_ = base->unity_;
  r->lambda_ = base->lambda_;
  return r;
}

AlgebraPtr FiniteAlgebra::from_table(BaseField k, std::vector<std::vector<Coeffs>> table, Coeffs unity,
                                     ScalarMatrix involution) {
  std::size_t d = unity.size();
  if (d == 0) fail(ErrorCode::kInvalidArgument, "algebra of dimension 0");
  if (table.size() != d || involution.rows() != d || involution.cols() != d)
    fail(ErrorCode::kInvalidArgument, "structure constant table has the wrong shape");
  for (const auto& row : table) {
    if (row.size() != d) fail(ErrorCode::kInvalidArgument, "structure constant table has the wrong shape");
    for (const auto& c : row)
      if (c.size() != d) fail(ErrorCode::kInvalidArgument, "structure constant table has the wrong shape");
  }
  auto r = make(k);
  r->kind_ = Kind::kTable;
  r->table_ = std::move(table);
  r->unity_ = std::move(unity);
  r->lambda_ = std::move(involution);
  r->validate();
  return r;
}

AlgebraPtr FiniteAlgebra::from_tower(const Tower& t) {
  AlgebraPtr a = field(t.base());
  for (const auto& st : t.stages()) a = adjoin_sqrt(a, a->from_coordinates(st.t), st.sign);
  return a;
}

void FiniteAlgebra::validate() const {
  std::size_t d = dimension();
  auto e = [&](std::size_t i) { return basis(i); };
  auto bad = [&](const std::string& what) { fail(ErrorCode::kInvalidArgument, "structure constants: " + what); };
  for (std::size_t i = 0; i < d; ++i) {
    if (!(mul(one(), e(i)) == e(i))) bad("unity does not act as identity on e" + std::to_string(i + 1));
    for (std::size_t j = 0; j < d; ++j)
      if (table_[i][j] != table_[j][i]) bad("not commutative");
  }
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t l) {
    if (!(mul(mul(e(i), e(j)), e(l)) == mul(e(i), mul(e(j), e(l)))))
      bad("not associative on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
          std::to_string(l + 1) + ")");
  };
  if (d <= 6) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) assoc(i, j, l);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (int n = 0; n < 512; ++n) assoc(pick(rng), pick(rng), pick(rng));
  }
  if (!(lambda_ * lambda_ == ScalarMatrix::identity(base(), d))) bad("involution does not square to the identity");
  if (!(involution(one()) == one())) bad("involution does not fix 1");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (!(involution(mul(e(i), e(j))) == mul(involution(e(i)), involution(e(j)))))
        bad("involution is not multiplicative");
}

const Coeffs& FiniteAlgebra::check(const Elem& a) const {
  const auto& c = a.as<Coeffs>();
  if (c.size() != dimension()) fail(ErrorCode::kRingMismatch, "element does not belong to " + signature());
  return c;
}

Coeffs FiniteAlgebra::mul_coeffs(const Coeffs& a, const Coeffs& b) const {
  std::size_t d = dimension();
  Coeffs r = zeros(base(), d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar f = a[i] * b[j];
      const Coeffs& t = table_[i][j];
      for (std::size_t l = 0; l < d; ++l)
        if (!t[l].is_zero()) r[l] += f * t[l];
    }
  }
  return r;
}

ScalarMatrix FiniteAlgebra::regular_matrix(const Elem& a) const {
  std::size_t d = dimension();
  ScalarMatrix m(base(), d, d);
  const Coeffs& c = check(a);
  for (std::size_t j = 0; j < d; ++j) {
    Coeffs col = mul_coeffs(c, basis(j).as<Coeffs>());
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

std::string FiniteAlgebra::signature() const {
  switch (kind_) {
    case Kind::kField: return "field(" + base().name() + ")";
    case Kind::kProduct: return "product(" + left_->signature() + "," + right_->signature() + ")";
    case Kind::kSwap: return "swap(" + left_->signature() + ")";
    case Kind::kSqrt:
      return "sqrt(" + left_->signature() + ";" + left_->format_coeffs(s_) + ";" + (sign_ > 0 ? "+" : "-") + ")";
    case Kind::kThicken: return std::string("thicken(") + left_->signature() + ";" + (sign_ > 0 ? "+" : "-") + ")";
    case Kind::kTable: break;
  }
  std::string s = "table(" + base().name() + ";";
  for (const auto& row : table_)
    for (const auto& c : row)
      for (const auto& x : c) s += x.to_string() + ",";
  s += ";";
  for (const auto& x : unity_) s += x.to_string() + ",";
  s += ";";
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = 0; j < dimension(); ++j) s += lambda_(i, j).to_string() + ",";
  return s + ")";
}

Elem FiniteAlgebra::from_scalar(const Scalar& c) const {
  Coeffs r = unity_;
  for (auto& x : r) x *= c;
  return Elem(ptr(), std::move(r));
}

Elem FiniteAlgebra::add(const Elem& a, const Elem& b) const {
  Coeffs r = check(a);
  const Coeffs& y = check(b);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return Elem(ptr(), std::move(r));
}

Elem FiniteAlgebra::neg(const Elem& a) const {
  Coeffs r = check(a);
  for (auto& x : r) x = -x;
  return Elem(ptr(), std::move(r));
}

Elem FiniteAlgebra::scale(const Elem& a, const Scalar& c) const {
  Coeffs r = check(a);
  for (auto& x : r) x *= c;
  return Elem(ptr(), std::move(r));
}

Elem FiniteAlgebra::mul(const Elem& a, const Elem& b) const {
  return Elem(ptr(), mul_coeffs(check(a), check(b)));
}

bool FiniteAlgebra::is_zero(const Elem& a) const {
  for (const auto& x : check(a))
    if (!x.is_zero()) return false;
  return true;
}

Elem FiniteAlgebra::involution(const Elem& a) const { return Elem(ptr(), lambda_.apply(check(a))); }

bool FiniteAlgebra::involution_is_trivial() const {
  return lambda_ == ScalarMatrix::identity(base(), dimension());
}

std::optional<Elem> FiniteAlgebra::try_inverse(const Elem& a, std::string* witness) const {
  ScalarMatrix m = regular_matrix(a);
  if (auto y = m.solve(unity_)) return Elem(ptr(), std::move(*y));
  if (witness) {
    auto ker = m.kernel();
    *witness = ker.empty() ? "" : format_coeffs(ker.front());
  }
  return std::nullopt;
}

std::optional<Scalar> FiniteAlgebra::as_scalar(const Elem& a) const {
  const Coeffs& c = check(a);
  std::size_t i = 0;
  while (unity_[i].is_zero()) ++i;
  Scalar f = c[i] / unity_[i];
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != unity_[j] * f) return std::nullopt;
  return f;
}

bool FiniteAlgebra::is_field() const {
  if (kind_ == Kind::kTable) return false;
  return maximal_ideals().size() == 1 && radical().empty();
}

Coeffs FiniteAlgebra::coordinates(const Elem& a) const { return check(a); }

Elem FiniteAlgebra::from_coordinates(const Coeffs& c) const {
  if (c.size() != dimension()) fail(ErrorCode::kInvalidArgument, "wrong coordinate count for " + signature());
  return Elem(ptr(), c);
}

std::optional<Elem> FiniteAlgebra::symbol(std::string_view name) const {
  if ((kind_ == Kind::kSqrt || kind_ == Kind::kThicken) && name == "t")
    return Elem(ptr(), padded(left_->unity_, left_->dimension(), dimension()));
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  std::size_t idx = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(ch - '0');
    if (idx > 4096) return std::nullopt;
  }
  if (idx == 0 || idx > dimension()) return std::nullopt;
  return basis(idx - 1);
}

std::optional<std::pair<RingPtr, RingPtr>> FiniteAlgebra::product_factors() const {
  if (kind_ != Kind::kProduct && kind_ != Kind::kSwap) return std::nullopt;
  return std::make_pair(RingPtr(left_), RingPtr(right_));
}

Elem FiniteAlgebra::from_factors(const Elem& a, const Elem& b) const {
  if (kind_ != Kind::kProduct && kind_ != Kind::kSwap) return Ring::from_factors(a, b);
  require_same_ring(*a.ring(), *left_);
  require_same_ring(*b.ring(), *right_);
  Coeffs r = a.as<Coeffs>();
  const Coeffs& y = b.as<Coeffs>();
  r.insert(r.end(), y.begin(), y.end());
  return Elem(ptr(), std::move(r));
}

std::string FiniteAlgebra::format_coeffs(const Coeffs& c) const {
  if (kind_ == Kind::kProduct || kind_ == Kind::kSwap) {
    std::size_t da = left_->dimension();
    Coeffs a(c.begin(), c.begin() + static_cast<long>(da)), b(c.begin() + static_cast<long>(da), c.end());
    return "(" + left_->format_coeffs(a) + " | " + right_->format_coeffs(b) + ")";
  }
  if (kind_ == Kind::kField) return format_terms({{c[0], ""}});
  if ((kind_ == Kind::kSqrt || kind_ == Kind::kThicken) && left_->kind_ == Kind::kField)
    return format_terms({{c[0], ""}, {c[1], "t"}});
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::size_t i = 0; i < c.size(); ++i) terms.emplace_back(c[i], "e" + std::to_string(i + 1));
  return format_terms(terms);
}

std::string FiniteAlgebra::format(const Elem& a) const { return format_coeffs(check(a)); }

std::vector<QuotientMap> FiniteAlgebra::maximal_ideals() const {
  BaseField k = base();
  std::vector<QuotientMap> out;
  auto extend_zero = [&](const QuotientMap& q, std::size_t before, std::size_t after) {
    QuotientMap r{q.target, {}};
    for (std::size_t i = 0; i < before; ++i) r.images.push_back(q.target->zero());
    r.images.insert(r.images.end(), q.images.begin(), q.images.end());
    for (std::size_t i = 0; i < after; ++i) r.images.push_back(q.target->zero());
    return r;
  };
  switch (kind_) {
    case Kind::kField: {
      auto f = Tower::field(k);
      out.push_back({f, {f->one()}});
      return out;
    }
    case Kind::kProduct:
    case Kind::kSwap: {
      std::size_t da = left_->dimension(), db = right_->dimension();
      for (const auto& q : left_->maximal_ideals()) out.push_back(extend_zero(q, 0, db));
      for (const auto& q : right_->maximal_ideals()) out.push_back(extend_zero(q, da, 0));
      return out;
    }
    case Kind::kSqrt:
    case Kind::kThicken: {
      for (const auto& q : left_->maximal_ideals()) {
        Elem sv = q.apply(s_);
        auto with_root = [&](const TowerPtr& target, const Elem& root) {
          QuotientMap r{target, {}};
          for (const auto& im : q.images) r.images.push_back(target->lift(im));
          for (const auto& im : q.images) r.images.push_back(target->lift(im) * root);
          return r;
        };
        if (sv.is_zero()) {
          out.push_back(with_root(q.target, q.target->zero()));
        } else if (auto c = q.target->sqrt(sv)) {
          out.push_back(with_root(q.target, *c));
          out.push_back(with_root(q.target, -*c));
        } else {
          TowerPtr f = q.target->extend(sv, 1);
          out.push_back(with_root(f, f->generator(f->levels() - 1)));
        }
      }
      return out;
    }
    case Kind::kTable: break;
  }
  fail(ErrorCode::kUnsupported, "maximal ideals need an algebra built from field/product/swap/sqrt/thicken");
}

std::vector<Coeffs> FiniteAlgebra::ideal_of(const QuotientMap& q) const {
  std::size_t d = dimension(), m = q.target->dimension();
  ScalarMatrix a(base(), m, d);
  for (std::size_t j = 0; j < d; ++j) {
    Coeffs col = q.target->coordinates(q.images[j]);
    for (std::size_t i = 0; i < m; ++i) a(i, j) = col[i];
  }
  return span_basis(base(), d, a.kernel());
}

std::vector<Coeffs> FiniteAlgebra::radical_from_quotients() const {
  auto maps = maximal_ideals();
  std::size_t d = dimension(), rows = 0;
  for (const auto& q : maps) rows += q.target->dimension();
  ScalarMatrix a(base(), rows, d);
  std::size_t r0 = 0;
  for (const auto& q : maps) {
    for (std::size_t j = 0; j < d; ++j) {
      Coeffs col = q.target->coordinates(q.images[j]);
      for (std::size_t i = 0; i < col.size(); ++i) a(r0 + i, j) = col[i];
    }
    r0 += q.target->dimension();
  }
  return span_basis(base(), d, a.kernel());
}

std::vector<Coeffs> FiniteAlgebra::radical() const {
  if (!base().is_rational()) {
    if (kind_ == Kind::kTable)
      fail(ErrorCode::kUnsupported, "radical over " + base().name() + " needs a constructor-built algebra");
    return radical_from_quotients();
  }
  // Kernel of the trace form (x, y) -> Tr(M_{xy}).
  std::size_t d = dimension();
  std::vector<Scalar> tr(d, Scalar(base(), 0));
  for (std::size_t l = 0; l < d; ++l) {
    ScalarMatrix m = regular_matrix(basis(l));
    for (std::size_t i = 0; i < d; ++i) tr[l] += m(i, i);
  }
  ScalarMatrix form(base(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Coeffs& p = table_[i][j];
      for (std::size_t l = 0; l < d; ++l)
        if (!p[l].is_zero()) form(i, j) += p[l] * tr[l];
    }
  return span_basis(base(), d, form.kernel());
}

}  // namespace azinv
