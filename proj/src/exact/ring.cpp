#include "exact/ring.hpp"

#include "exact/errors.hpp"
#include "exact/linalg.hpp"

namespace azinv {

bool same_ring(const Ring& a, const Ring& b) {
  return &a == &b || a.signature() == b.signature();
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b))
    fail(ErrorCode::kRingMismatch, "elements of " + a.signature() + " and " + b.signature());
}

static const Ring& ring_of(const Elem& e) {
  if (!e.ring()) fail(ErrorCode::kInvalidArgument, "uninitialised element");
  return *e.ring();
}

Elem Elem::operator+(const Elem& o) const {
  require_same_ring(ring_of(*this), ring_of(o));
  return ring_->add(*this, o);
}

Elem Elem::operator-(const Elem& o) const {
  require_same_ring(ring_of(*this), ring_of(o));
  return ring_->add(*this, ring_->neg(o));
}

Elem Elem::operator*(const Elem& o) const {
  require_same_ring(ring_of(*this), ring_of(o));
  return ring_->mul(*this, o);
}

Elem Elem::operator-() const { return ring_of(*this).neg(*this); }

bool Elem::operator==(const Elem& o) const {
  require_same_ring(ring_of(*this), ring_of(o));
  return ring_->is_zero(ring_->add(*this, ring_->neg(o)));
}

bool Elem::is_zero() const { return ring_of(*this).is_zero(*this); }

bool Elem::is_one() const {
  auto s = ring_of(*this).as_scalar(*this);
  return s && s->is_one();
}

Elem Elem::inverse() const { return ring_of(*this).inverse(*this); }
Elem Elem::lambda() const { return ring_of(*this).involution(*this); }
Elem Elem::scaled(const Scalar& c) const { return ring_of(*this).scale(*this, c); }
std::string Elem::to_string() const { return ring_of(*this).format(*this); }

Elem Elem::pow(long e) const {
  Elem base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Elem r = ring_->one();
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Elem Ring::inverse(const Elem& a) const {
  std::string witness;
  auto inv = try_inverse(a, &witness);
  if (!inv) throw NotInvertibleError(format(a) + " is not invertible in " + signature(), witness);
  return *inv;
}

Coeffs Ring::coordinates(const Elem&) const {
  fail(ErrorCode::kUnsupported, signature() + " is not finite-dimensional over its base field");
}

Elem Ring::from_coordinates(const Coeffs&) const {
  fail(ErrorCode::kUnsupported, signature() + " is not finite-dimensional over its base field");
}

Elem Ring::basis(std::size_t i) const {
  Coeffs c(dimension(), Scalar(base(), 0));
  c.at(i) = Scalar(base(), 1);
  return from_coordinates(c);
}

Elem Ring::from_factors(const Elem&, const Elem&) const {
  fail(ErrorCode::kUnsupported, signature() + " is not presented as a product");
}

std::optional<Elem> Ring::nonfixed_generator() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    Elem e = basis(i);
    if (!is_zero(add(involution(e), neg(e)))) return e;
  }
  return std::nullopt;
}

std::string Ring::regular_kernel_witness(const Elem& a) const {
  std::size_t d = dimension();
  if (d == 0) return "";
  ScalarMatrix m(base(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Coeffs col = coordinates(mul(a, basis(j)));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  auto ker = m.kernel();
  if (ker.empty()) return "";
  return format(from_coordinates(ker.front()));
}

}  // namespace azinv
