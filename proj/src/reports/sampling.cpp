#include "reports/sampling.hpp"

#include "exact/errors.hpp"

namespace azinv::sampling {

Scalar scalar(Rng& g, const BaseField& k, long lim) {
  std::uniform_int_distribution<long> num(-lim, lim);
  if (!k.is_rational()) return Scalar(k, num(g));
  long den = std::uniform_int_distribution<long>(1, 3)(g);
  return Scalar(k, mpq_class(num(g), den));
}

Elem element(Rng& g, const RingPtr& r, long lim) {
  if (r->dimension() == 0) fail(ErrorCode::kUnsupported, "random elements need a finite-dimensional ring");
  Coeffs c;
  for (std::size_t i = 0; i < r->dimension(); ++i) c.push_back(scalar(g, r->base(), lim));
  return r->from_coordinates(c);
}

Matrix matrix(Rng& g, const RingPtr& r, std::size_t rows, std::size_t cols, long lim) {
  Matrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(g, r, lim);
  return m;
}

Matrix invertible(Rng& g, const RingPtr& r, std::size_t n, long lim) {
  for (int tries = 0; tries < 1000; ++tries) {
    Matrix m = matrix(g, r, n, n, lim);
    if (r->try_inverse(m.determinant(), nullptr)) return m;
  }
  fail(ErrorCode::kVerificationFailed, "could not sample an invertible matrix");
}

Matrix hermitian(Rng& g, const RingPtr& r, std::size_t n, const Elem& eps, long lim) {
  Elem leps = eps.lambda();
  for (int tries = 0; tries < 1000; ++tries) {
    Matrix m = matrix(g, r, n, n, lim);
    Matrix h = m + m.lambda_tr().scaled(leps);
    if (r->try_inverse(h.determinant(), nullptr)) return h;
  }
  fail(ErrorCode::kHypothesisViolated, "no invertible (eps, lambda tr)-hermitian matrix found in size " + std::to_string(n));
}

Elem norm_one(Rng& g, const RingPtr& r) {
  for (int tries = 0; tries < 1000; ++tries) {
    Elem b = element(g, r, 5);
    auto binv = r->try_inverse(b, nullptr);
    if (!binv) continue;
    Elem v = *binv * b.lambda();
    if (std::uniform_int_distribution<int>(0, 1)(g)) v = -v;
    return v;
  }
  fail(ErrorCode::kVerificationFailed, "could not sample a unit");
}

namespace {

AlgebraPtr tree(Rng& g, const BaseField& k, std::size_t budget) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(g); };
  auto sign = [&] { return pick(2) ? 1 : -1; };
  if (budget < 2) return FiniteAlgebra::field(k);
  switch (pick(5)) {
    case 0: return FiniteAlgebra::field(k);
    case 1: {
      auto a = tree(g, k, budget / 2);
      return FiniteAlgebra::swap(a);
    }
    case 2: {
      auto a = tree(g, k, budget / 2);
      auto b = tree(g, k, budget - a->dimension());
      if (a->dimension() + b->dimension() > budget) return a;
      return FiniteAlgebra::product(a, b);
    }
    case 3: {
      auto a = tree(g, k, budget / 2);
      // the adjoined square must be a fixed unit of a
      for (int tries = 0; tries < 20; ++tries) {
        Elem s = element(g, a, 4);
        if (s == s.lambda() && a->try_inverse(s, nullptr)) return FiniteAlgebra::adjoin_sqrt(a, s, sign());
      }
      return a;
    }
    default: {
      auto a = tree(g, k, budget / 2);
      return FiniteAlgebra::thicken(a, sign());
    }
  }
}

}  // namespace

AlgebraPtr algebra(Rng& g, BaseField k, std::size_t max_dim) { return tree(g, k, max_dim); }

}  // namespace azinv::sampling
