#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/ring.hpp"

namespace azinv {

class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const RingPtr& ring, std::size_t n);
  static Matrix scalar(const RingPtr& ring, std::size_t n, const Elem& c);
  static Matrix diagonal(const RingPtr& ring, const std::vector<Elem>& d);
  static Matrix parse(const RingPtr& ring, std::string_view text);
  static Matrix from_strings(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<Elem> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Elem>& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Elem& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix conj() const;  // lambda entrywise
  Matrix lambda_tr() const { return transpose().conj(); }
  Matrix kron(const Matrix& o) const;
  Matrix direct_sum(const Matrix& o) const;
  bool is_zero() const;
  // The scalar c if this equals c*I.
  std::optional<Elem> as_scalar() const;

  Elem determinant() const;
  std::optional<Matrix> try_inverse() const;
  Matrix inverse() const;  // throws NotInvertible

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  void require_same(const Matrix& o) const;
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

}  // namespace azinv
