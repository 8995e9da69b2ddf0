#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "exact/errors.hpp"
#include "exact/matrix.hpp"
#include "exact/parser.hpp"

namespace azt {

using namespace azinv;

inline Elem el(const RingPtr& r, const std::string& s) { return parse_element(r, s); }
inline Matrix mat(const RingPtr& r, const std::string& s) { return Matrix::parse(r, s); }

// Code of the azinv::Error thrown by f, or nullopt.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Scalar rand_q(std::mt19937_64& g, const BaseField& k, long lim = 5) {
  std::uniform_int_distribution<long> d(-lim, lim);
  if (!k.is_rational()) return Scalar(k, d(g));
  long den = std::uniform_int_distribution<long>(1, 3)(g);
  return Scalar(k, mpq_class(d(g), den));
}

// Random element through coordinates; finite-dimensional rings only.
inline Elem rand_elem(std::mt19937_64& g, const RingPtr& r, long lim = 5) {
  Coeffs c;
  for (std::size_t i = 0; i < r->dimension(); ++i) c.push_back(rand_q(g, r->base(), lim));
  return r->from_coordinates(c);
}

inline Matrix rand_matrix(std::mt19937_64& g, const RingPtr& r, std::size_t n, long lim = 3) {
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rand_elem(g, r, lim);
  return m;
}

}  // namespace azt
