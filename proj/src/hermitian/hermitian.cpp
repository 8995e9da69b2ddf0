#include "hermitian/hermitian.hpp"

#include <map>

#include "exact/errors.hpp"

namespace azinv {

HermitianCheck validate_hermitian(const Matrix& h, const Elem& eps) {
  HermitianCheck c;
  if (!h.square()) {
    c.ok = false;
    c.invertible = false;
    c.message = "matrix is not square";
    return c;
  }
  require_same_ring(*h.ring(), *eps.ring());
  if (!(eps.lambda() * eps).is_one())
    fail(ErrorCode::kNotNormOne, "epsilon " + eps.to_string() + " does not have norm one");
  Matrix lt = h.lambda_tr();
  for (std::size_t i = 0; i < h.rows() && !c.entry; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (!(lt(i, j) == eps * h(i, j))) {
        c.entry = std::make_pair(i, j);
        c.ok = false;
        c.message = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): lambda(h_" +
                    std::to_string(j + 1) + std::to_string(i + 1) + ") = " + lt(i, j).to_string() +
                    " but eps*h_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                    (eps * h(i, j)).to_string();
        break;
      }
  if (!h.try_inverse()) {
    c.invertible = false;
    if (c.ok) c.message = "matrix is not invertible";
    c.ok = false;
  }
  return c;
}

HermitianMatrix::HermitianMatrix(Matrix h, Elem eps) : h_(std::move(h)), eps_(std::move(eps)) {
  const RingPtr& r = h_.ring();
  if (h_.square() && h_.rows() % 2 && r->involution_is_trivial() && eps_ == r->from_int(-1))
    fail(ErrorCode::kOddDimensionAlternating,
         "alternating forms of odd dimension " + std::to_string(h_.rows()) + " are degenerate");
  auto c = validate_hermitian(h_, eps_);
  if (!c.ok) fail(c.invertible ? ErrorCode::kNotHermitian : ErrorCode::kNotInvertible, c.message);
}

Elem form_value(const Matrix& h, const std::vector<Elem>& x, const std::vector<Elem>& y) {
  const Ring& r = *h.ring();
  Elem acc = r.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (r.is_zero(x[i])) continue;
    Elem row = r.zero();
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!r.is_zero(y[j]) && !r.is_zero(h(i, j))) row = r.add(row, r.mul(h(i, j), y[j]));
    acc = r.add(acc, r.mul(r.involution(x[i]), row));
  }
  return acc;
}

namespace {

using Vec = std::vector<Elem>;

Vec axpy(const Vec& b, const Elem& c, const Vec& x) {
  Vec r = b;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + c * x[i];
  return r;
}

Vec unit_vector(const Ring& r, std::size_t n, std::size_t i) {
  Vec v(n, r.zero());
  v[i] = r.one();
  return v;
}

void require_field(const Ring& r, const char* op) {
  if (!r.is_field()) fail(ErrorCode::kUnsupported, std::string(op) + " needs a field, got " + r.signature());
}

Matrix from_columns(const RingPtr& ring, const std::vector<Vec>& cols) {
  Matrix m(ring, cols.empty() ? 0 : cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

}  // namespace

Diagonalization diagonalize(const HermitianMatrix& hm) {
  const Matrix& h = hm.matrix();
  const RingPtr& ring = h.ring();
  require_field(*ring, "diagonalize");
  std::size_t n = h.rows();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(*ring, n, i));
  auto theta = ring->nonfixed_generator();
  Diagonalization out{Matrix(), {}};
  std::vector<Vec> cols;
  while (!basis.empty()) {
    // Candidates: b_i, then b_i + b_j, b_i + 2 b_j, b_i + theta b_j.
    std::optional<std::pair<Vec, std::size_t>> pick;
    auto tryv = [&](const Vec& c, std::size_t drop) {
      if (!pick && !form_value(h, c, c).is_zero()) pick = std::make_pair(c, drop);
    };
    for (std::size_t i = 0; i < basis.size() && !pick; ++i) tryv(basis[i], i);
    std::vector<Elem> mults{ring->one(), ring->from_int(2)};
    if (theta) mults.push_back(*theta);
    for (const Elem& mu : mults)
      for (std::size_t i = 0; i < basis.size() && !pick; ++i)
        for (std::size_t j = 0; j < basis.size() && !pick; ++j)
          if (i != j) tryv(axpy(basis[i], mu, basis[j]), i);
    if (!pick)
      fail(ErrorCode::kHypothesisViolated,
           "every candidate vector is isotropic: eps = -1 with trivial involution in even dimension");
    Vec x = pick->first;
    Elem alpha = form_value(h, x, x);
    Elem ainv = alpha.inverse();
    basis.erase(basis.begin() + static_cast<long>(pick->second));
    for (auto& b : basis) b = axpy(b, -(ainv * form_value(h, x, b)), x);
    cols.push_back(x);
    out.diagonal.push_back(alpha);
  }
  out.v = from_columns(ring, cols);
  if (out.v.lambda_tr() * h * out.v != Matrix::diagonal(ring, out.diagonal) || !out.v.try_inverse())
    fail(ErrorCode::kVerificationFailed, "diagonalization witness failed to verify");
  return out;
}

Matrix standard_alternating(const RingPtr& ring, std::size_t n) {
  Matrix j(ring, n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    j(i, i + 1) = ring->one();
    j(i + 1, i) = ring->from_int(-1);
  }
  return j;
}

Matrix symplectic_normal_form(const HermitianMatrix& hm) {
  const Matrix& h = hm.matrix();
  const RingPtr& ring = h.ring();
  require_field(*ring, "symplectic_normal_form");
  if (!ring->involution_is_trivial())
    fail(ErrorCode::kHypothesisViolated, "symplectic normal form needs the trivial involution");
  std::size_t n = h.rows();
  if (n % 2) fail(ErrorCode::kOddDimensionAlternating, "no invertible alternating form in odd dimension " + std::to_string(n));
  if (!(hm.epsilon() == ring->from_int(-1))) fail(ErrorCode::kHypothesisViolated, "symplectic normal form needs eps = -1");
  for (std::size_t i = 0; i < n; ++i)
    if (!h(i, i).is_zero()) fail(ErrorCode::kNotHermitian, "alternating form has a nonzero diagonal entry");
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(*ring, n, i));
  std::vector<Vec> cols;
  while (!basis.empty()) {
    Vec x = basis.front();
    std::size_t yi = 1;
    while (yi < basis.size() && form_value(h, x, basis[yi]).is_zero()) ++yi;
    if (yi == basis.size()) fail(ErrorCode::kNotInvertible, "degenerate alternating form");
    Vec y = basis[yi];
    Elem c = form_value(h, x, y).inverse();
    for (auto& e : y) e = e * c;
    basis.erase(basis.begin() + static_cast<long>(yi));
    basis.erase(basis.begin());
    for (auto& b : basis) {
      Elem hyb = form_value(h, y, b), hxb = form_value(h, x, b);
      b = axpy(axpy(b, hyb, x), -hxb, y);
    }
    cols.push_back(x);
    cols.push_back(y);
  }
  Matrix v = from_columns(ring, cols);
  if (v.lambda_tr() * h * v != standard_alternating(ring, n) || !v.try_inverse())
    fail(ErrorCode::kVerificationFailed, "symplectic witness failed to verify");
  return v;
}

EpsilonNormalization normalize_epsilon(const Elem& eps) {
  const Ring& r = *eps.ring();
  if (!(eps.lambda() * eps).is_one()) fail(ErrorCode::kNotNormOne, "epsilon " + eps.to_string() + " does not have norm one");
  for (int sigma : {1, -1}) {
    Elem beta = sigma > 0 ? r.one() + eps : r.one() - eps;
    auto binv = r.try_inverse(beta, nullptr);
    if (!binv) continue;
    Elem lhs = *binv * beta.lambda();
    Elem rhs = eps.inverse().scaled(Scalar(r.base(), sigma));
    if (!(lhs == rhs)) fail(ErrorCode::kVerificationFailed, "normalization identity failed for " + eps.to_string());
    return {sigma, beta};
  }
  fail(ErrorCode::kHypothesisViolated, "neither 1 + eps nor 1 - eps is a unit for eps = " + eps.to_string());
}

CongruenceWitness congruence_witness(const HermitianMatrix& h1, const HermitianMatrix& h2) {
  require_same_ring(*h1.ring(), *h2.ring());
  if (h1.size() != h2.size()) fail(ErrorCode::kInvalidArgument, "forms of different sizes");
  if (!(h1.epsilon() == h2.epsilon())) fail(ErrorCode::kInvalidArgument, "forms with different eps");
  auto k = std::dynamic_pointer_cast<const Tower>(h1.ring());
  if (!k || !k->is_field())
    fail(ErrorCode::kUnsupported, "congruence witnesses need a field tower, got " + h1.ring()->signature());
  std::size_t n = h1.size();
  CongruenceWitness w;
  auto norm = normalize_epsilon(h1.epsilon());
  w.sigma = norm.sigma;
  w.beta = norm.beta;
  HermitianMatrix g1(h1.matrix().scaled(norm.beta), k->from_int(norm.sigma));
  HermitianMatrix g2(h2.matrix().scaled(norm.beta), k->from_int(norm.sigma));
  TowerPtr ext = k;
  Matrix p, q;
  std::vector<Elem> roots;
  if (norm.sigma < 0 && k->involution_is_trivial()) {
    w.method = "symplectic";
    p = symplectic_normal_form(g1);
    q = symplectic_normal_form(g2);
  } else {
    w.method = "diagonal";
    auto d1 = diagonalize(g1);
    auto d2 = diagonalize(g2);
    p = d1.v;
    q = d2.v;
    std::map<Coeffs, Elem> cache;  // s -> fixed square root, in the current extension
    for (std::size_t i = 0; i < n; ++i) {
      Elem s = d1.diagonal[i].inverse() * d2.diagonal[i];
      if (!(s.lambda() == s)) fail(ErrorCode::kVerificationFailed, "diagonal ratio is not fixed");
      Elem se = ext->lift(s);
      auto it = cache.find(s.as<Coeffs>());
      if (it != cache.end()) {
        roots.push_back(it->second);
        continue;
      }
      std::optional<Elem> root;
      if (ext->is_field())
        if (auto z = ext->sqrt(se); z && z->lambda() == *z) root = z;
      if (!root) {
        w.tower.push_back(ext->format(se));
        ext = ext->extend(se, 1);
        root = ext->generator(ext->levels() - 1);
      }
      cache.emplace(s.as<Coeffs>(), *root);
      roots.push_back(*root);
    }
  }
  auto lift = [&](const Matrix& m) {
    Matrix r(ext, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ext->lift(m(i, j));
    return r;
  };
  Matrix dm = Matrix::identity(ext, n);
  for (std::size_t i = 0; i < roots.size(); ++i) dm(i, i) = ext->lift(roots[i]);
  w.v = lift(p) * dm * lift(q.inverse());
  w.ring = ext;
  Matrix a = lift(h1.matrix()), b = lift(h2.matrix());
  // h2 is invertible, so the identity also forces det(v) to be a unit
  if (w.v.lambda_tr() * (a * w.v) != b)
    fail(ErrorCode::kVerificationFailed, "congruence witness failed to verify");
  return w;
}

}  // namespace azinv
