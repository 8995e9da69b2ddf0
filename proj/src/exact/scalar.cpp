#include "exact/scalar.hpp"

#include <cctype>

#include "exact/errors.hpp"

namespace azinv {

BaseField BaseField::prime(unsigned long p) {
  if (p == 2) fail(ErrorCode::kCharacteristicTwo, "characteristic 2 is not supported");
  mpz_class z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    fail(ErrorCode::kInvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  return BaseField(p);
}

BaseField BaseField::parse(std::string_view text) {
  std::string s(text);
  if (s == "Q" || s == "QQ") return rationals();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.rfind("F_", 0) == 0)
    digits = s.substr(2);
  else if (s.rfind("F", 0) == 0)
    digits = s.substr(1);
  if (digits.empty() || digits.size() > 18)
    fail(ErrorCode::kParse, "unknown base field '" + s + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorCode::kParse, "unknown base field '" + s + "'");
  return prime(std::stoul(digits));
}

std::string BaseField::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const BaseField& k, long v) : k_(k), v_(v) { reduce(); }

Scalar::Scalar(const BaseField& k, const mpq_class& v) : k_(k), v_(v) {
  v_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  if (k_.is_rational()) return;
  mpz_class p(k_.modulus());
  mpz_class num = v_.get_num() % p;
  mpz_class den = v_.get_den() % p;
  if (den == 0) fail(ErrorCode::kNotInvertible, "denominator divisible by " + k_.name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

static void same_field(const BaseField& a, const BaseField& b) {
  if (!(a == b)) fail(ErrorCode::kRingMismatch, "scalars from " + a.name() + " and " + b.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  same_field(k_, o.k_);
  Scalar r;
  r.k_ = k_;
  r.v_ = v_ + o.v_;
  if (!k_.is_rational() && r.v_ >= k_.modulus()) r.v_ -= k_.modulus();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  same_field(k_, o.k_);
  Scalar r;
  r.k_ = k_;
  r.v_ = v_ - o.v_;
  if (!k_.is_rational() && r.v_ < 0) r.v_ += k_.modulus();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_field(k_, o.k_);
  v_ += o.v_;
  if (!k_.is_rational() && v_ >= k_.modulus()) v_ -= k_.modulus();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  same_field(k_, o.k_);
  v_ -= o.v_;
  if (!k_.is_rational() && v_ < 0) v_ += k_.modulus();
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  same_field(k_, o.k_);
  Scalar r;
  r.k_ = k_;
  if (k_.is_rational()) {
    r.v_ = v_ * o.v_;
    return r;
  }
  // residues are kept in [0, p)
  unsigned __int128 prod = static_cast<unsigned __int128>(mpz_get_ui(v_.get_num_mpz_t())) * mpz_get_ui(o.v_.get_num_mpz_t());
  r.v_ = static_cast<unsigned long>(prod % k_.modulus());
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.k_ = k_;
  r.v_ = -v_;
  if (!k_.is_rational() && r.v_ < 0) r.v_ += k_.modulus();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertibleError("zero is not invertible in " + k_.name(), "1");
  if (k_.is_rational()) return Scalar(k_, 1 / v_);
  mpz_class p(k_.modulus()), inv;
  mpz_class num = v_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(k_, mpq_class(inv));
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(k_, 1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return *this;
  if (k_.is_rational()) {
    if (sgn(v_) < 0) return std::nullopt;
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(k_, mpq_class(rn, rd));
  }
  mpz_class p(k_.modulus());
  mpz_class a = v_.get_num();
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // Tonelli-Shanks
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, t, r, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return Scalar(k_, mpq_class(r));
}

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace azinv
