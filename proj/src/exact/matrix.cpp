#include "exact/matrix.hpp"

#include <unordered_map>

#include "exact/errors.hpp"
#include "exact/parser.hpp"

namespace azinv {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_->zero()) {}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) { return scalar(ring, n, ring->one()); }

Matrix Matrix::scalar(const RingPtr& ring, std::size_t n, const Elem& c) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::diagonal(const RingPtr& ring, const std::vector<Elem>& d) {
  Matrix m(ring, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_strings(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorCode::kParse, "empty matrix");
  Matrix m(ring, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      fail(ErrorCode::kParse, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(m.cols_));
    for (std::size_t j = 0; j < m.cols_; ++j) {
      try {
        m(i, j) = parse_element(ring, rows[i][j]);
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what(),
                         e.position());
      }
    }
  }
  return m;
}

Matrix Matrix::parse(const RingPtr& ring, std::string_view text) {
  return from_strings(ring, split_matrix_text(text));
}

std::vector<Elem> Matrix::column(std::size_t j) const {
  std::vector<Elem> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const std::vector<Elem>& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::require_same(const Matrix& o) const {
  require_same_ring(*ring_, *o.ring_);
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_->add(a_[i], ring_->neg(o.a_[i]));
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(o);
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem& x = (*this)(i, l);
      if (ring_->is_zero(x)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem& y = o(l, j);
        if (ring_->is_zero(y)) continue;
        r(i, j) = ring_->add(r(i, j), ring_->mul(x, y));
      }
    }
  return r;
}

Matrix Matrix::scaled(const Elem& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = ring_->mul(c, x);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!same_ring(*ring_, *o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!ring_->is_zero(ring_->add(a_[i], ring_->neg(o.a_[i])))) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = ring_->involution(x);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  require_same(o);
  Matrix r(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem& x = (*this)(i, j);
      if (ring_->is_zero(x)) continue;
      for (std::size_t p = 0; p < o.rows_; ++p)
        for (std::size_t q = 0; q < o.cols_; ++q) r(i * o.rows_ + p, j * o.cols_ + q) = ring_->mul(x, o(p, q));
    }
  return r;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  require_same(o);
  Matrix r(ring_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) r(rows_ + i, cols_ + j) = o(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!ring_->is_zero(x)) return false;
  return true;
}

std::optional<Elem> Matrix::as_scalar() const {
  if (!square() || rows_ == 0) return std::nullopt;
  const Elem& c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem& x = (*this)(i, j);
      if (i == j ? !ring_->is_zero(ring_->add(x, ring_->neg(c))) : !ring_->is_zero(x)) return std::nullopt;
    }
  return c;
}

Elem Matrix::determinant() const {
  if (!square()) fail(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  if (rows_ > 20) fail(ErrorCode::kUnsupported, "determinant expansion limited to size 20");
  // Laplace expansion along rows, memoised on the set of remaining columns.
  std::unordered_map<unsigned long, Elem> memo;
  std::size_t n = rows_;
  auto rec = [&](auto&& self, std::size_t row, unsigned long cols) -> Elem {
    if (row == n) return ring_->one();
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Elem acc = ring_->zero();
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1ul << j))) continue;
      const Elem& x = (*this)(row, j);
      if (!ring_->is_zero(x)) {
        Elem term = ring_->mul(x, self(self, row + 1, cols & ~(1ul << j)));
        acc = parity ? ring_->add(acc, ring_->neg(term)) : ring_->add(acc, term);
      }
      parity ^= 1;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, 0, n == 0 ? 0ul : (~0ul >> (64 - n)));
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (!square()) return std::nullopt;
  std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(ring_, n);
  bool stuck = false;
  for (std::size_t c = 0; c < n && !stuck; ++c) {
    std::size_t p = c;
    std::optional<Elem> pinv;
    for (; p < n; ++p) {
      if (ring_->is_zero(a(p, c))) continue;
      pinv = ring_->try_inverse(a(p, c), nullptr);
      if (pinv) break;
    }
    if (!pinv) {
      stuck = true;
      break;
    }
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = ring_->mul(a(c, j), *pinv);
      inv(c, j) = ring_->mul(inv(c, j), *pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || ring_->is_zero(a(i, c))) continue;
      Elem f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = ring_->add(a(i, j), ring_->neg(ring_->mul(f, a(c, j))));
        inv(i, j) = ring_->add(inv(i, j), ring_->neg(ring_->mul(f, inv(c, j))));
      }
    }
  }
  if (!stuck) return inv;
  if (ring_->is_field()) return std::nullopt;
  // No unit pivot: fall back to the adjugate.
  auto dinv = ring_->try_inverse(determinant(), nullptr);
  if (!dinv) return std::nullopt;
  Matrix adj(ring_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(ring_, n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t s = 0, ss = 0; s < n; ++s) {
          if (s == j) continue;
          minor(rr, ss++) = (*this)(r, s);
        }
        ++rr;
      }
      Elem cof = n == 1 ? ring_->one() : minor.determinant();
      if ((i + j) % 2) cof = ring_->neg(cof);
      adj(j, i) = ring_->mul(cof, *dinv);
    }
  return adj;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) {
    Elem det = square() ? determinant() : ring_->zero();
    throw NotInvertibleError("matrix is not invertible over " + ring_->signature(),
                             "determinant " + det.to_string());
  }
  return *inv;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(ring_->format((*this)(i, j)));
  return out;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + ring_->format((*this)(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace azinv
