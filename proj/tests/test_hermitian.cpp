#include "doctest.h"
#include "support.hpp"

#include "hermitian/hermitian.hpp"
#include "reports/sampling.hpp"

using namespace azt;

namespace {

const BaseField kQ = BaseField::rationals();

TowerPtr qq() { return Tower::field(kQ); }
TowerPtr qi() { return qq()->extend(qq()->from_int(-1), -1); }

bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("hermitian validation") {
  auto k = qq();
  CHECK(validate_hermitian(Matrix::identity(k, 3), k->one()).ok);
  CHECK(validate_hermitian(mat(k, "[[0,1],[-1,0]]"), k->from_int(-1)).ok);
  auto bad = validate_hermitian(mat(k, "[[1,2],[3,1]]"), k->one());
  CHECK(!bad.ok);
  CHECK(bad.entry == std::make_pair(std::size_t{0}, std::size_t{1}));
  auto sing = validate_hermitian(mat(k, "[[1,1],[1,1]]"), k->one());
  CHECK(!sing.invertible);
  CHECK(error_of([&] { validate_hermitian(Matrix::identity(k, 2), k->from_int(2)); }) == ErrorCode::kNotNormOne);
  CHECK(error_of([&] { HermitianMatrix(mat(k, "[[1,2],[3,1]]"), k->one()); }) == ErrorCode::kNotHermitian);
  CHECK(error_of([&] { HermitianMatrix(Matrix(k, 3, 3), k->from_int(-1)); }) == ErrorCode::kOddDimensionAlternating);
}

TEST_CASE("diagonalization examples") {
  auto k = qq();
  auto d = diagonalize(HermitianMatrix(mat(k, "[[3,0],[0,5]]"), k->one()));
  CHECK(d.v == Matrix::identity(k, 2));
  auto e = diagonalize(HermitianMatrix(mat(k, "[[0,1],[1,0]]"), k->one()));
  CHECK(e.diagonal[0] == k->from_int(2));
  CHECK(e.diagonal[1] == el(k, "-1/2"));
  CHECK(e.v.lambda_tr() * mat(k, "[[0,1],[1,0]]") * e.v == Matrix::diagonal(k, e.diagonal));

  auto r = qi();
  auto f = diagonalize(HermitianMatrix(mat(r, "[[0,1],[1,0]]"), r->one()));
  for (const auto& a : f.diagonal) CHECK(a.lambda() == a);
  // skew-hermitian forms need the non-fixed direction
  auto s = diagonalize(HermitianMatrix(mat(r, "[[0,1],[-1,0]]"), r->from_int(-1)));
  CHECK(s.v.lambda_tr() * mat(r, "[[0,1],[-1,0]]") * s.v == Matrix::diagonal(r, s.diagonal));
  CHECK(error_of([&] { diagonalize(HermitianMatrix(mat(k, "[[0,1],[-1,0]]"), k->from_int(-1))); }) ==
        ErrorCode::kHypothesisViolated);
}

TEST_CASE("symplectic normal form") {
  auto k = qq();
  CHECK(symplectic_normal_form(HermitianMatrix(mat(k, "[[0,1],[-1,0]]"), k->from_int(-1))) == Matrix::identity(k, 2));
  CHECK(symplectic_normal_form(HermitianMatrix(mat(k, "[[0,2],[-2,0]]"), k->from_int(-1))) == mat(k, "[[1,0],[0,1/2]]"));
  auto f7 = Tower::field(BaseField::prime(7));
  sampling::Rng g(3);
  for (int i = 0; i < 20; ++i) {
    Matrix h = sampling::hermitian(g, f7, 4, f7->from_int(-1));
    Matrix v = symplectic_normal_form(HermitianMatrix(h, f7->from_int(-1)));
    CHECK(v.transpose() * h * v == standard_alternating(f7, 4));
  }
}

TEST_CASE("epsilon normalization") {
  auto k = qq();
  auto a = normalize_epsilon(k->one());
  CHECK(a.sigma == 1);
  CHECK(a.beta == k->from_int(2));
  auto b = normalize_epsilon(k->from_int(-1));
  CHECK(b.sigma == -1);
  CHECK(b.beta == k->from_int(2));
  auto r = qi();
  auto c = normalize_epsilon(el(r, "r1"));
  CHECK(c.beta == el(r, "1 + r1"));
  CHECK(c.beta.inverse() * c.beta.lambda() == el(r, "-r1"));
  CHECK(c.sigma == 1);
}

TEST_CASE("congruence witnesses") {
  auto k = qq();
  auto id = congruence_witness(HermitianMatrix(mat(k, "[[1,0],[0,3]]"), k->one()),
                               HermitianMatrix(mat(k, "[[1,0],[0,3]]"), k->one()));
  CHECK(id.tower.empty());
  CHECK(id.v == Matrix::identity(k, 2));

  auto w = congruence_witness(HermitianMatrix(mat(k, "[[1]]"), k->one()), HermitianMatrix(mat(k, "[[2]]"), k->one()));
  CHECK(w.tower == std::vector<std::string>{"2"});
  CHECK(w.v.to_string() == "[[r1]]");

  auto s = congruence_witness(HermitianMatrix(mat(k, "[[0,3],[-3,0]]"), k->from_int(-1)),
                              HermitianMatrix(mat(k, "[[0,1],[-1,0]]"), k->from_int(-1)));
  CHECK(s.tower.empty());
  CHECK(s.method == "symplectic");
  CHECK(s.v.transpose() * mat(k, "[[0,3],[-3,0]]") * s.v == mat(k, "[[0,1],[-1,0]]"));
}

TEST_CASE("random round trips over Q(i)") {
  auto r = qi();
  sampling::Rng g(5);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 1 + it % 4;
    Elem eps = it % 2 ? r->one() : el(r, "r1");
    Matrix h = sampling::hermitian(g, r, n, eps);
    auto d = diagonalize(HermitianMatrix(h, eps));
    CHECK(is_diagonal(d.v.lambda_tr() * h * d.v));
    Matrix p = sampling::invertible(g, r, n);
    Matrix h2 = p.lambda_tr() * h * p;
    auto w = congruence_witness(HermitianMatrix(h, eps), HermitianMatrix(h2, eps));
    Matrix hl(w.ring, n, n), h2l(w.ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        hl(i, j) = w.ring->lift(h(i, j));
        h2l(i, j) = w.ring->lift(h2(i, j));
      }
    CHECK(w.v.lambda_tr() * hl * w.v == h2l);
    CHECK(w.tower.size() <= n);
  }
}
