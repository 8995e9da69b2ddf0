#include "exact/linalg.hpp"

#include "exact/errors.hpp"

namespace azinv {

ScalarMatrix::ScalarMatrix(BaseField k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), a_(rows * cols, Scalar(k, 0)) {}

ScalarMatrix ScalarMatrix::identity(BaseField k, std::size_t n) {
  ScalarMatrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(k, 1);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  ScalarMatrix r(k_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Scalar& x = (*this)(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(l, j);
    }
  return r;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r(rows_, Scalar(k_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::vector<std::size_t> ScalarMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Scalar inv = (*this)(row, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, c).is_zero()) continue;
      Scalar f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
  ScalarMatrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_, Scalar(k_, 0));
    v[f] = Scalar(k_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
  ScalarMatrix aug(k_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar(k_, 0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  ScalarMatrix aug(k_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar(k_, 1);
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(k_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  ScalarMatrix m = *this;
  Scalar det(k_, 1);
  std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(k_, 0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> span_basis(const BaseField& k, std::size_t dim,
                                            const std::vector<std::vector<Scalar>>& vectors) {
  ScalarMatrix m(k, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  auto pivots = m.rref();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> row(dim, Scalar(k, 0));
    for (std::size_t j = 0; j < dim; ++j) row[j] = m(r, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace azinv
