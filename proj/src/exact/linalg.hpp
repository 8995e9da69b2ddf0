#pragma once

#include <optional>
#include <vector>

#include "exact/scalar.hpp"

namespace azinv {

// Dense matrix over the base field k.
class ScalarMatrix {
 public:
  ScalarMatrix(BaseField k, std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(BaseField k, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BaseField& field() const { return k_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  bool operator==(const ScalarMatrix& o) const { return a_ == o.a_ && rows_ == o.rows_; }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of the right null space.
  std::vector<std::vector<Scalar>> kernel() const;
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  std::optional<ScalarMatrix> inverse() const;
  Scalar determinant() const;

 private:
  BaseField k_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Row-reduced basis of the span of the given vectors (canonical form of a subspace).
std::vector<std::vector<Scalar>> span_basis(const BaseField& k, std::size_t dim,
                                            const std::vector<std::vector<Scalar>>& vectors);

}  // namespace azinv
