#pragma once

#include <random>

#include "exact/finite_algebra.hpp"
#include "exact/matrix.hpp"
#include "exact/tower.hpp"
#include "involutive/family.hpp"

namespace azinv::sampling {

using Rng = std::mt19937_64;

// Small rationals p/q (|p| <= lim, 1 <= q <= 3), or residues over F_p.
Scalar scalar(Rng& g, const BaseField& k, long lim = 4);
// Random element of a finite-dimensional ring via coordinates.
Elem element(Rng& g, const RingPtr& r, long lim = 3);
Matrix matrix(Rng& g, const RingPtr& r, std::size_t rows, std::size_t cols, long lim = 3);
// Invertible matrix over a field.
Matrix invertible(Rng& g, const RingPtr& r, std::size_t n, long lim = 3);

// Invertible h with h^{lambda tr} = eps h; h = M + lambda(eps) M^{lambda tr}, resampled until invertible.
Matrix hermitian(Rng& g, const RingPtr& r, std::size_t n, const Elem& eps, long lim = 3);

// b^-1 lambda(b) for random units b, times -1 half the time when that is again norm one.
Elem norm_one(Rng& g, const RingPtr& r);

// Random constructor tree (field, product, swap, sqrt, thicken) of dimension <= max_dim over k.
AlgebraPtr algebra(Rng& g, BaseField k, std::size_t max_dim);

}  // namespace azinv::sampling
