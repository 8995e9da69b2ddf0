#include "involutions/involution.hpp"

#include <cmath>

#include "exact/errors.hpp"
#include "exact/linalg.hpp"
#include "exact/parser.hpp"

namespace azinv {

namespace {

Matrix unit(const RingPtr& ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix e(ring, n, n);
  e(i, j) = ring->one();
  return e;
}

std::size_t action_degree(const Matrix& action) {
  std::size_t n2 = action.rows();
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n2))));
  if (n == 0 || n * n != n2 || action.cols() != n2)
    fail(ErrorCode::kInvalidArgument, "linear action must be n^2 x n^2");
  return n;
}

Matrix action_image(const Matrix& action, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(action.ring(), n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) m(k, l) = action(k * n + l, i * n + j);
  return m;
}

std::size_t field_rank(Matrix m) {
  const Ring& r = *m.ring();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && r.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    Elem inv = r.inverse(m(rank, c));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (r.is_zero(m(i, c))) continue;
      Elem f = r.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = r.add(m(i, j), r.neg(r.mul(f, m(rank, j))));
    }
    ++rank;
  }
  return rank;
}

bool ring_is_field_like(const Ring& r) { return r.is_field(); }

}  // namespace

MatrixInvolution MatrixInvolution::from_gram(const Matrix& h) {
  if (!h.square() || h.rows() == 0) fail(ErrorCode::kInvalidGram, "Gram matrix must be square and nonempty");
  auto hinv = h.try_inverse();
  if (!hinv) fail(ErrorCode::kInvalidGram, "Gram matrix is not invertible over " + h.ring()->signature());
  auto eps = (*hinv * h.lambda_tr()).as_scalar();
  if (!eps) fail(ErrorCode::kInvalidGram, "h^-1 h^(lambda tr) is not a scalar matrix, so tau does not square to the identity");
  if (!(eps->lambda() * *eps).is_one()) fail(ErrorCode::kInvalidGram, "epsilon " + eps->to_string() + " does not have norm one");
  MatrixInvolution t(h, *hinv, *eps);
  t.validate();
  return t;
}

Matrix MatrixInvolution::apply(const Matrix& m) const { return h_ * m.lambda_tr() * hinv_; }

Matrix MatrixInvolution::image_of_unit(std::size_t i, std::size_t j) const {
  std::size_t n = degree();
  Matrix r(ring(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (h_(k, j).is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) r(k, l) = h_(k, j) * hinv_(i, l);
  }
  return r;
}

Matrix MatrixInvolution::linear_action() const {
  std::size_t n = degree();
  Matrix a(ring(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix t = image_of_unit(i, j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) a(k * n + l, i * n + j) = t(k, l);
    }
  return a;
}

void MatrixInvolution::validate() const {
  if (!(h_ * hinv_ == Matrix::identity(ring(), degree())))
    fail(ErrorCode::kVerificationFailed, "Gram inverse failed to verify");
  // eps scalar gives tau^2(M) = eps^-1 M eps = M; the E_ij checks below are exhaustive in small degree.
  if (degree() <= 4) verify_involution_exhaustive(*this);
}

void verify_involution_exhaustive(const MatrixInvolution& tau) {
  std::size_t n = tau.degree();
  const RingPtr& ring = tau.ring();
  std::vector<Matrix> img;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      img.push_back(tau.image_of_unit(i, j));
      if (tau.apply(img.back()) != unit(ring, n, i, j))
        fail(ErrorCode::kInvalidGram, "tau^2 differs from the identity on E_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Matrix lhs = j == k ? img[i * n + l] : Matrix(ring, n, n);
          if (lhs != img[k * n + l] * img[i * n + j])
            fail(ErrorCode::kInvalidGram, "tau does not reverse products");
        }
  std::vector<Elem> scalars{ring->one()};
  if (auto g = ring->nonfixed_generator()) scalars.push_back(*g);
  for (const auto& r : scalars)
    if (tau.apply(Matrix::scalar(ring, n, r)) != Matrix::scalar(ring, n, r.lambda()))
      fail(ErrorCode::kInvalidGram, "tau does not restrict to lambda on scalars");
}

SkolemNoether skolem_noether_witness(const Matrix& action) {
  std::size_t n = action_degree(action);
  const RingPtr& ring = action.ring();
  auto phi = [&](std::size_t i, std::size_t j) { return action_image(action, n, i, j); };
  Matrix sum(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) sum = sum + phi(i, i);
  if (sum != Matrix::identity(ring, n)) fail(ErrorCode::kInvalidArgument, "automorphism does not fix the identity");
  // phi(E_ij) phi(E_kl) = delta_jk phi(E_il)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (n > 4 && j != k && l != 0) continue;
          Matrix rhs = j == k ? phi(i, l) : Matrix(ring, n, n);
          if (phi(i, j) * phi(k, l) != rhs) fail(ErrorCode::kInvalidArgument, "linear action is not multiplicative");
        }
  SkolemNoether out;
  // u_ab = sum_c phi(E_ca) E_bc satisfies phi(E_pq) u_ab = u_ab E_pq.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix u(ring, n, n);
      for (std::size_t c = 0; c < n; ++c) {
        Matrix img = phi(c, a);
        for (std::size_t r = 0; r < n; ++r) u(r, c) = img(r, b);
      }
      if (!u.is_zero()) out.solution_basis.push_back(u);
    }
  auto laurent = std::dynamic_pointer_cast<const Laurent>(ring);
  for (Matrix u : out.solution_basis) {
    std::vector<Elem> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) entries.push_back(u(i, j));
    if (laurent) {
      // Primitive generator of the rank-one solution module, then a monomial normalisation.
      Elem g = laurent->gcd(entries);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) = *laurent->divide_exact(u(i, j), g);
    }
    Elem lead = ring->zero();
    for (std::size_t i = 0; i < n * n && lead.is_zero(); ++i) lead = u(i / n, i % n);
    if (laurent) {
      auto [p, shift] = laurent->to_poly(lead);
      u = u.scaled(laurent->monomial(p.coeff(0), shift).inverse());
    } else if (ring_is_field_like(*ring)) {
      u = u.scaled(lead.inverse());
    }
    if (!ring->try_inverse(u.determinant(), nullptr)) continue;
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p)
      for (std::size_t q = 0; q < n && ok; ++q) ok = phi(p, q) * u == u * unit(ring, n, p, q);
    if (!ok) fail(ErrorCode::kVerificationFailed, "Skolem-Noether candidate failed the conjugation identity");
    out.u = u;
    return out;
  }
  std::string basis;
  for (const auto& u : out.solution_basis) basis += (basis.empty() ? "" : ", ") + u.to_string();
  fail(ErrorCode::kNotInner, "no invertible solution of phi(E_ij) u = u E_ij; solution space spanned by {" + basis + "}");
}

MatrixInvolution MatrixInvolution::from_action(const Matrix& action) {
  std::size_t n = action_degree(action);
  const RingPtr& ring = action.ring();
  // phi = tau o lambda tr is R-linear with phi(E_ij) = tau(E_ji).
  Matrix phi(ring, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n * n; ++r) phi(r, i * n + j) = action(r, j * n + i);
  auto sn = skolem_noether_witness(phi);
  MatrixInvolution tau = from_gram(sn.u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (tau.image_of_unit(i, j) != action_image(action, n, i, j))
        fail(ErrorCode::kVerificationFailed, "recovered Gram form does not reproduce the action");
  tau.from_action_ = true;
  return tau;
}

CoarseTypeClass coarse_type(const MatrixInvolution& tau, const FamilyPtr& family) {
  return reduce_to_canonical(NormOneElement(tau.epsilon()), family);
}

MatrixInvolution standard_involution(std::size_t n, const NormOneElement& eps) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "degree must be positive");
  const RingPtr& ring = eps.value().ring();
  Matrix h(ring, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, n + i) = ring->one();
    h(n + i, i) = eps.value();
  }
  return MatrixInvolution::from_gram(h);
}

MatrixInvolution tensor(const MatrixInvolution& a, const MatrixInvolution& b) {
  require_same_ring(*a.ring(), *b.ring());
  return MatrixInvolution::from_gram(a.gram().kron(b.gram()));
}

RamificationPoint parse_point(const FamilyPtr& family, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t == "inf" || t == "infinity" || t == "oo") return {"infinity", std::nullopt, true};
  if (t == "point") return {"point", std::nullopt, false};
  if (t.rfind("x=", 0) == 0) t = t.substr(2);
  if (t.size() > 2 && t.front() == '(' && (t.find(":0)") != std::string::npos || t.find(",0)") != std::string::npos))
    t = t.substr(1, t.size() - 4);
  auto k = Tower::field(family->base());
  auto v = k->as_scalar(parse_element(k, t));
  RamificationPoint z{"", *v, false};
  z.label = family->kind() == FamilyKind::kHyperelliptic ? "(" + v->to_string() + ":0)" : "x=" + v->to_string();
  return z;
}

MatrixInvolution specialize(const MatrixInvolution& tau, const FamilyPtr& family, const RamificationPoint& z) {
  require_same_ring(*tau.ring(), *family->ring());
  auto k = Tower::field(family->base());
  std::size_t n = tau.degree();
  Matrix out(k, n, n);
  switch (family->kind()) {
    case FamilyKind::kTrivialField: return tau;
    case FamilyKind::kLaurent: {
      if (z.infinity || !z.x) fail(ErrorCode::kNotRamificationPoint, "Laurent ramification points are x = 1 and x = -1");
      Scalar c = *z.x;
      if (!(c * c).is_one())
        fail(ErrorCode::kNotRamificationPoint, "x = " + c.to_string() + " is not fixed by x -> x^-1, so lambda is not the identity there");
      auto l = family->laurent_ring();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = k->from_scalar(l->eval(tau.gram()(i, j), c));
      return MatrixInvolution::from_gram(out);
    }
    case FamilyKind::kHyperelliptic: {
      if (z.infinity) fail(ErrorCode::kUnsupported, "infinity: not evaluated");
      auto hyp = family->hyperelliptic_ring();
      bool is_root = false;
      for (const auto& a : hyp->roots()) is_root = is_root || (z.x && a == *z.x);
      if (!is_root) fail(ErrorCode::kNotRamificationPoint, "x = " + (z.x ? z.x->to_string() : z.label) + " is not a root of f");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = k->from_scalar(hyp->eval_at_root(tau.gram()(i, j), *z.x));
      return MatrixInvolution::from_gram(out);
    }
    case FamilyKind::kFiniteAlgebra:
      if (family->ring()->involution_is_trivial() && family->ring()->is_field()) return tau;
      break;
    case FamilyKind::kQuadraticEtale: break;
  }
  fail(ErrorCode::kNotRamificationPoint, family->describe() + " has no ramification points");
}

std::string first_kind_name(FirstKind k) { return k == FirstKind::kOrthogonal ? "Orthogonal" : "Symplectic"; }

FirstKindResult classify_first_kind(const MatrixInvolution& tau) {
  const RingPtr& ring = tau.ring();
  if (!ring->is_field() || !ring->involution_is_trivial())
    fail(ErrorCode::kHypothesisViolated, "first-kind classification needs a field with trivial involution");
  std::size_t n = tau.degree();
  const Matrix& h = tau.gram();
  // ker(tau - id) = ker(M -> (tau(M) - M) h) = ker(M -> h M^T - M h).
  std::size_t rank;
  if (ring->dimension() == 1) {
    ScalarMatrix a(ring->base(), n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t col = i * n + j;
        for (std::size_t k = 0; k < n; ++k) a(k * n + i, col) += *ring->as_scalar(h(k, j));
        for (std::size_t l = 0; l < n; ++l) a(i * n + l, col) -= *ring->as_scalar(h(j, l));
      }
    rank = a.rank();
  } else {
    Matrix a(ring, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t col = i * n + j;
        for (std::size_t k = 0; k < n; ++k) a(k * n + i, col) = a(k * n + i, col) + h(k, j);
        for (std::size_t l = 0; l < n; ++l) a(i * n + l, col) = a(i * n + l, col) - h(j, l);
      }
    rank = field_rank(a);
  }
  std::size_t dim = n * n - rank;
  FirstKindResult r{FirstKind::kOrthogonal, dim};
  if (dim == n * (n + 1) / 2)
    r.kind = FirstKind::kOrthogonal;
  else if (dim == n * (n - 1) / 2)
    r.kind = FirstKind::kSymplectic;
  else
    fail(ErrorCode::kDimensionAnomaly, "dim ker(tau - id) = " + std::to_string(dim) + " for n = " + std::to_string(n));
  Elem expected = ring->from_int(r.kind == FirstKind::kOrthogonal ? 1 : -1);
  if (!(tau.epsilon() == expected))
    fail(ErrorCode::kDimensionAnomaly, "dimension count says " + first_kind_name(r.kind) + " but eps = " + tau.epsilon().to_string());
  return r;
}

TypeVector type_vector(const MatrixInvolution& tau, const FamilyPtr& family) {
  if (family->kind() != FamilyKind::kLaurent && family->kind() != FamilyKind::kHyperelliptic)
    fail(ErrorCode::kInvalidArgument, "type vectors are defined for the Laurent and hyperelliptic families");
  auto ct = coarse_type(tau, family);
  TypeVector tv;
  for (const auto& z : ramification_points(*family)) {
    if (z.infinity) {
      tv.infinity_not_evaluated = true;
      continue;
    }
    auto fk = classify_first_kind(specialize(tau, family, z));
    int sign = fk.kind == FirstKind::kOrthogonal ? 1 : -1;
    // The canonical representative evaluated at z must give the same sign.
    Scalar at;
    if (family->kind() == FamilyKind::kLaurent)
      at = family->laurent_ring()->eval(*ct.representative, *z.x);
    else
      at = family->hyperelliptic_ring()->eval_at_root(*ct.representative, *z.x);
    if (!(at == Scalar(family->base(), sign)))
      fail(ErrorCode::kVerificationFailed, "type at " + z.label + " disagrees with the coarse type " + ct.label);
    tv.entries.emplace_back(z.label, sign);
  }
  return tv;
}

}  // namespace azinv
