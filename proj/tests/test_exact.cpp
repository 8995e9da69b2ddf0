#include "doctest.h"
#include "support.hpp"

#include "exact/finite_algebra.hpp"
#include "exact/hyperelliptic.hpp"
#include "exact/laurent.hpp"
#include "exact/linalg.hpp"
#include "exact/tower.hpp"

using namespace azt;

namespace {

// Leibniz expansion, used as an independent determinant.
Elem leibniz(const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Elem acc = m.ring()->zero();
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    Elem t = m.ring()->from_int(sign);
    for (std::size_t i = 0; i < n; ++i) t = t * m(i, p[i]);
    acc = acc + t;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

}  // namespace

TEST_CASE("scalars over Q and F_p") {
  auto q = BaseField::rationals();
  CHECK((Scalar(q, mpq_class(1, 2)) + Scalar(q, mpq_class(1, 3))).to_string() == "5/6");
  CHECK(Scalar(q, mpq_class(6, -4)).to_string() == "-3/2");
  auto f7 = BaseField::parse("F7");
  CHECK(f7.modulus() == 7);
  CHECK(Scalar(f7, 3).inverse() == Scalar(f7, 5));
  CHECK(Scalar(f7, -1) == Scalar(f7, 6));
  CHECK(error_of([&] { Scalar(f7, 0).inverse(); }) == ErrorCode::kNotInvertible);
  CHECK(error_of([] { BaseField::prime(2); }) == ErrorCode::kCharacteristicTwo);
  CHECK(error_of([] { BaseField::prime(9); }) == ErrorCode::kInvalidArgument);

  // brute-force oracle for square roots mod 13
  auto f13 = BaseField::prime(13);
  for (long a = 0; a < 13; ++a) {
    bool square = false;
    for (long b = 0; b < 13; ++b) square = square || (b * b) % 13 == a;
    auto r = Scalar(f13, a).sqrt();
    CHECK(r.has_value() == square);
    if (r) CHECK(*r * *r == Scalar(f13, a));
  }
  CHECK(Scalar(q, mpq_class(9, 4)).sqrt() == Scalar(q, mpq_class(3, 2)));
  CHECK(!Scalar(q, 2).sqrt());
}

TEST_CASE("polynomial gcd") {
  auto q = BaseField::rationals();
  auto lin = [&](long a) { return Poly(q, {Scalar(q, -a), Scalar(q, 1)}); };
  Poly g = gcd(lin(1) * lin(2), lin(1) * lin(-3) * lin(2).scaled(Scalar(q, 5)));
  CHECK(g == lin(1) * lin(2));
  CHECK(gcd(lin(1), lin(2)) == Poly::constant(Scalar(q, 1)));
}

TEST_CASE("laurent ring") {
  auto l = Laurent::create(BaseField::rationals());
  RingPtr r = l;
  CHECK(el(r, "x^-2 + 3*x").to_string() == "3*x + x^-2");
  CHECK(el(r, "x").lambda() == el(r, "x^-1"));
  CHECK(el(r, "2*x^3").inverse() == el(r, "1/2*x^-3"));
  CHECK(el(r, "(x - 1)*(x + 1)") == el(r, "x^2 - 1"));
  try {
    el(r, "1 + x").inverse();
    FAIL("expected NotInvertible");
  } catch (const NotInvertibleError& e) {
    CHECK(e.witness().find("support") != std::string::npos);
  }
  CHECK(l->eval(el(r, "x + x^-1"), Scalar(r->base(), 2)) == Scalar(r->base(), mpq_class(5, 2)));
  CHECK(*l->divide_exact(el(r, "x^3 - x"), el(r, "x + 1")) == el(r, "x^2 - x"));
}

TEST_CASE("parser errors carry positions") {
  auto l = Laurent::create(BaseField::rationals());
  try {
    parse_element(l, "1 + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK(error_of([&] { parse_element(l, "x^"); }) == ErrorCode::kParse);
  CHECK(error_of([&] { parse_element(l, "r1"); }) == ErrorCode::kParse);
  CHECK(error_of([&] { parse_element(l, "(1"); }) == ErrorCode::kParse);
}

TEST_CASE("square-root towers") {
  auto k = Tower::field(BaseField::rationals());
  auto qi = k->extend(k->from_int(-1), -1);
  RingPtr r = qi;
  CHECK(r->is_field());
  CHECK(el(r, "r1*r1") == r->from_int(-1));
  CHECK(el(r, "(1 + r1)*(1 - r1)") == r->from_int(2));
  CHECK(el(r, "2 + 3*r1").lambda() == el(r, "2 - 3*r1"));
  CHECK(el(r, "1 + r1").inverse() == el(r, "1/2 - 1/2*r1"));

  auto q23 = k->extend(k->from_int(2), 1)->extend(k->extend(k->from_int(2), 1)->from_int(3), -1);
  RingPtr r2 = q23;
  CHECK(r2->dimension() == 4);
  CHECK(el(r2, "r1*r2*r1*r2") == r2->from_int(6));
  std::mt19937_64 g(7);
  for (int i = 0; i < 50; ++i) {
    Elem a = rand_elem(g, r2);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == r2->one());
    CHECK(a.lambda().lambda() == a);
    Elem b = rand_elem(g, r2);
    CHECK((a * b).lambda() == a.lambda() * b.lambda());
    auto s = r2->sqrt(a * a);
    REQUIRE(s);
    CHECK(*s * *s == a * a);
  }
  CHECK(*r2->sqrt(r2->from_int(6)) * *r2->sqrt(r2->from_int(6)) == r2->from_int(6));

  // a split stage is not a field
  auto split = k->extend(k->from_int(4), -1);
  CHECK(!split->is_field());
  CHECK(!split->try_inverse(el(split, "2 + r1"), nullptr));
}

TEST_CASE("finite algebras from constructors") {
  auto k = BaseField::rationals();
  auto f = FiniteAlgebra::field(k);
  auto sw = FiniteAlgebra::swap(f);
  RingPtr r = sw;
  CHECK(el(r, "(1 | 2)*(3 | 4)") == el(r, "(3 | 8)"));
  CHECK(el(r, "(1 | 2)").lambda() == el(r, "(2 | 1)"));
  CHECK(!r->try_inverse(el(r, "(0 | 2)"), nullptr));

  auto th = FiniteAlgebra::thicken(f, -1);
  RingPtr t = th;
  CHECK(el(t, "t*t").is_zero());
  CHECK(el(t, "1 + t").inverse() == el(t, "1 - t"));
  CHECK(el(t, "t").lambda() == el(t, "-t"));
  CHECK(th->radical().size() == 1);
  CHECK(th->maximal_ideals().size() == 1);

  auto prod = FiniteAlgebra::product(sw, f);
  CHECK(prod->dimension() == 3);
  CHECK(prod->maximal_ideals().size() == 3);
  CHECK(prod->radical().empty());
}

TEST_CASE("structure-constant tables are validated") {
  auto k = BaseField::rationals();
  // k x k with a non-associative perturbation is rejected
  std::vector<std::vector<Coeffs>> table(2, std::vector<Coeffs>(2, Coeffs{Scalar(k, 0), Scalar(k, 0)}));
  table[0][0] = {Scalar(k, 1), Scalar(k, 0)};
  table[1][1] = {Scalar(k, 0), Scalar(k, 1)};
  ScalarMatrix swap(k, 2, 2);
  swap(0, 1) = Scalar(k, 1);
  swap(1, 0) = Scalar(k, 1);
  auto ok = FiniteAlgebra::from_table(k, table, {Scalar(k, 1), Scalar(k, 1)}, swap);
  CHECK(el(ok, "e1").lambda() == el(ok, "e2"));
  CHECK(error_of([&] { ok->maximal_ideals(); }) == ErrorCode::kUnsupported);
  table[1][1] = {Scalar(k, 1), Scalar(k, 1)};
  CHECK(error_of([&] { FiniteAlgebra::from_table(k, table, {Scalar(k, 1), Scalar(k, 1)}, swap); }).has_value());
}

TEST_CASE("hyperelliptic coordinate ring") {
  auto k = BaseField::rationals();
  auto h = Hyperelliptic::create(k, {Scalar(k, 0), Scalar(k, 1), Scalar(k, 2)});
  RingPtr r = h;
  CHECK(h->genus() == 1);
  CHECK(el(r, "y*y") == el(r, "x^3 - 3*x^2 + 2*x"));
  CHECK(el(r, "y").lambda() == el(r, "-y"));
  CHECK(h->eval_at_root(el(r, "x + 2*y"), Scalar(k, 2)) == Scalar(k, 2));
  CHECK(!r->try_inverse(el(r, "x"), nullptr));
  CHECK(el(r, "-3").inverse() == el(r, "-1/3"));
  CHECK(error_of([&] { Hyperelliptic::create(k, {Scalar(k, 0), Scalar(k, 1)}); }).has_value());
}

TEST_CASE("matrices: determinant against Leibniz, inverse, printing") {
  auto k = Tower::field(BaseField::rationals());
  auto qi = k->extend(k->from_int(-1), -1);
  std::mt19937_64 g(11);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + it % 4;
    Matrix m = rand_matrix(g, qi, n);
    CHECK(m.determinant() == leibniz(m));
    if (auto inv = m.try_inverse()) CHECK(m * *inv == Matrix::identity(qi, n));
    else CHECK(m.determinant().is_zero());
    CHECK(Matrix::parse(qi, m.to_string()) == m);
  }
  auto l = Laurent::create(BaseField::rationals());
  Matrix h = mat(l, "[[0,1],[x,0]]");
  CHECK(h.inverse() == mat(l, "[[0,x^-1],[1,0]]"));
  CHECK(h.lambda_tr() == mat(l, "[[0,x^-1],[1,0]]"));
  CHECK(error_of([&] { mat(l, "[[1,x],[1,x]]").inverse(); }) == ErrorCode::kNotInvertible);
  CHECK(error_of([&] { mat(l, "[[1,2],[3]]"); }).has_value());
}

TEST_CASE("rational linear algebra") {
  auto q = BaseField::rationals();
  ScalarMatrix a(q, 2, 3);
  a(0, 0) = Scalar(q, 1);
  a(0, 1) = Scalar(q, 2);
  a(1, 2) = Scalar(q, 1);
  CHECK(a.rank() == 2);
  auto ker = a.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Scalar(q, -2));
  CHECK(ker[0][1] == Scalar(q, 1));
  CHECK(ker[0][2] == Scalar(q, 0));
}
