#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "exact/poly.hpp"
#include "exact/scalar.hpp"

namespace azinv {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

using Coeffs = std::vector<Scalar>;
using LaurentTerms = std::map<long, Scalar>;
struct HypTerms {
  Poly p;  // p(x) + q(x)*y
  Poly q;
};
using Payload = std::variant<Coeffs, LaurentTerms, HypTerms>;

class Elem {
 public:
  Elem() = default;
  Elem(RingPtr ring, Payload data) : ring_(std::move(ring)), data_(std::move(data)) {}

  const RingPtr& ring() const { return ring_; }
  const Payload& data() const { return data_; }
  template <class T>
  const T& as() const { return std::get<T>(data_); }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;
  Elem inverse() const;
  Elem lambda() const;
  Elem pow(long e) const;
  Elem scaled(const Scalar& c) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  Payload data_;
};

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  explicit Ring(BaseField k) : k_(k) {}
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const BaseField& base() const { return k_; }
  RingPtr ptr() const { return shared_from_this(); }

  // Canonical description; two rings are the same iff signatures agree.
  virtual std::string signature() const = 0;

  virtual Elem from_scalar(const Scalar& c) const = 0;
  Elem zero() const { return from_scalar(Scalar(k_, 0)); }
  Elem one() const { return from_scalar(Scalar(k_, 1)); }
  Elem from_int(long v) const { return from_scalar(Scalar(k_, v)); }

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem scale(const Elem& a, const Scalar& c) const { return mul(a, from_scalar(c)); }
  virtual bool is_zero(const Elem& a) const = 0;
  virtual Elem involution(const Elem& a) const = 0;
  virtual bool involution_is_trivial() const = 0;
  virtual std::string format(const Elem& a) const = 0;
  // Returns a^{-1}, or nullopt and a printable certificate in *witness.
  virtual std::optional<Elem> try_inverse(const Elem& a, std::string* witness) const = 0;
  Elem inverse(const Elem& a) const;
  // The value c when a = c*1, nullopt otherwise.
  virtual std::optional<Scalar> as_scalar(const Elem& a) const = 0;

  virtual bool is_field() const { return false; }
  virtual std::optional<Elem> sqrt(const Elem&) const { return std::nullopt; }

  // Finite-dimensional k-algebras; dimension 0 means not finite-dimensional.
  virtual std::size_t dimension() const { return 0; }
  virtual Coeffs coordinates(const Elem& a) const;
  virtual Elem from_coordinates(const Coeffs& c) const;
  Elem basis(std::size_t i) const;

  // Parser hooks.
  virtual std::optional<Elem> symbol(std::string_view) const { return std::nullopt; }
  virtual std::optional<std::pair<RingPtr, RingPtr>> product_factors() const { return std::nullopt; }
  virtual Elem from_factors(const Elem& a, const Elem& b) const;

  // An element with lambda(e) != e, if the involution is nontrivial.
  virtual std::optional<Elem> nonfixed_generator() const;

 protected:
  // Kernel vector of multiplication by a, printed; "" if a is a unit.
  std::string regular_kernel_witness(const Elem& a) const;

 private:
  BaseField k_;
};

}  // namespace azinv
