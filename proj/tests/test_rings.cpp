#include "doctest.h"
#include "support.hpp"

#include "involutive/family.hpp"
#include "involutive/rings.hpp"

using namespace azt;

namespace {

const BaseField kQ = BaseField::rationals();

AlgebraPtr qxq_swap() { return FiniteAlgebra::swap(FiniteAlgebra::field(kQ)); }
AlgebraPtr dual_numbers() { return FiniteAlgebra::thicken(FiniteAlgebra::field(kQ), -1); }
AlgebraPtr sqrt2_flip() {
  auto f = FiniteAlgebra::field(kQ);
  return FiniteAlgebra::adjoin_sqrt(f, f->from_int(2), -1);
}

}  // namespace

TEST_CASE("quadratic etale presentations") {
  auto k = Tower::field(kQ);
  CHECK(is_quadratic_etale_presentation(k->zero(), k->from_int(-2)));
  CHECK(!is_quadratic_etale_presentation(k->zero(), k->zero()));
  auto f5 = Tower::field(BaseField::prime(5));
  CHECK(!is_quadratic_etale_presentation(f5->from_int(1), f5->from_int(4)));
  CHECK(is_quadratic_etale_presentation(f5->from_int(1), f5->from_int(1)));
}

TEST_CASE("etale criterion") {
  auto sw = qxq_swap();
  auto p = etale_criterion(*sw);
  REQUIRE(p.etale);
  // r^2 - t r + n = 0 and the discriminant (r - lambda r)^2 is a unit
  CHECK(p.r * p.r - p.trace * p.r + p.norm == sw->zero());
  Elem d = p.r - p.r.lambda();
  CHECK(sw->try_inverse(d * d, nullptr).has_value());
  CHECK(p.trace == p.trace.lambda());
  CHECK(p.norm == p.norm.lambda());

  auto dn = etale_criterion(*dual_numbers());
  CHECK(!dn.etale);
  CHECK(!dn.searched.empty());

  auto s2 = sqrt2_flip();
  auto p2 = etale_criterion(*s2);
  REQUIRE(p2.etale);
  CHECK(p2.r == el(s2, "t"));
  CHECK(p2.trace.is_zero());
  CHECK(p2.norm == s2->from_int(-2));
  CHECK(p2.polynomial() == "x^2 - 2");
}

TEST_CASE("structure of algebras with field fixed ring") {
  auto a = classify_fixed_local(qxq_swap());
  CHECK(a.verdict == LocalVerdict::kQuadraticEtaleOverFixed);
  CHECK(a.ideals.size() == 2);
  CHECK(a.lambda_image == std::vector<int>{1, 0});

  auto b = classify_fixed_local(dual_numbers());
  CHECK(b.verdict == LocalVerdict::kLocalNotEtale);
  CHECK(b.ideals.size() == 1);
  CHECK(b.residue_involution_trivial);
  CHECK(b.radical.size() == 1);

  auto c = classify_fixed_local(sqrt2_flip());
  CHECK(c.verdict == LocalVerdict::kQuadraticEtaleOverFixed);
  CHECK(c.ideals.size() == 1);

  // Q x Q with trivial involution: fixed ring is not a field
  auto f = FiniteAlgebra::field(kQ);
  CHECK(error_of([&] { classify_fixed_local(FiniteAlgebra::product(f, f)); }) == ErrorCode::kFixedRingNotField);
  CHECK(!fixed_ring_is_field(*FiniteAlgebra::product(f, f)));
  CHECK(fixed_ring_is_field(*qxq_swap()));
}

TEST_CASE("fixed subrings") {
  auto fs = fixed_subring(*Family::laurent(kQ));
  CHECK(!fs.finite);
  CHECK(fs.description == "Q[x + x^-1]");
  CHECK(fixed_subring(*Family::hyperelliptic(kQ, {Scalar(kQ, 0), Scalar(kQ, 1), Scalar(kQ, -1)}, true)).description == "Q[x]");
  auto basis = fixed_basis(*qxq_swap());
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == basis[0].lambda());
}

TEST_CASE("norm and trace") {
  auto l = Family::laurent(kQ);
  auto nt = norm_trace(el(l->ring(), "x"));
  CHECK(nt.norm.is_one());
  CHECK(nt.trace == el(l->ring(), "x + x^-1"));
  auto qi = Family::quadratic_sqrt(kQ, Scalar(kQ, -1));
  auto nt2 = norm_trace(el(qi->ring(), "3 + 4*r1"));
  CHECK(nt2.norm == qi->ring()->from_int(25));
  CHECK(nt2.trace == qi->ring()->from_int(6));
  auto sw = qxq_swap();
  auto nt3 = norm_trace(el(sw, "(2 | 5)"));
  CHECK(nt3.norm == el(sw, "(10 | 10)"));
  CHECK(nt3.trace == el(sw, "(7 | 7)"));
}

TEST_CASE("Hilbert 90 witnesses") {
  auto sw = qxq_swap();
  auto w = hilbert90_witness(NormOneElement(el(sw, "(4 | 1/4)")));
  CHECK(w.a.inverse() * w.a.lambda() == el(sw, "(4 | 1/4)"));

  auto qi = Family::quadratic_sqrt(kQ, Scalar(kQ, -1))->ring();
  Elem r = el(qi, "3/5 + 4/5*r1");
  auto w2 = hilbert90_witness(NormOneElement(r));
  CHECK(w2.t.lambda() * r == w2.t);
  CHECK(w2.a.inverse() * w2.a.lambda() == r);
  CHECK(w2.t == el(qi, "8/5 + 4/5*r1"));

  auto one = hilbert90_witness(NormOneElement(qi->one()));
  CHECK(one.a.is_one());
  CHECK(one.t == qi->from_int(2));

  CHECK(error_of([&] { NormOneElement(el(qi, "1 + r1")); }) == ErrorCode::kNotNormOne);
  // -1 is not of the form a^-1 lambda(a) over a field with trivial involution
  auto q = Tower::field(kQ);
  CHECK(error_of([&] { hilbert90_witness(NormOneElement(q->from_int(-1))); }) == ErrorCode::kHypothesisViolated);
}

TEST_CASE("families") {
  auto split = Family::quadratic(kQ, Scalar(kQ, 1), Scalar(kQ, 0));
  CHECK(split->split());
  CHECK(split->kind() == FamilyKind::kQuadraticEtale);
  auto q8 = Family::quadratic_sqrt(kQ, Scalar(kQ, 8));
  CHECK(!q8->split());
  // x^2 - 8 has root 2*r1 with r1^2 = 2
  Elem root = *q8->presentation_root();
  CHECK(root * root == q8->ring()->from_int(8));
  CHECK(error_of([&] { Family::quadratic(kQ, Scalar(kQ, 2), Scalar(kQ, 1)); }).has_value());
  CHECK(Family::trivial(kQ)->kind() == FamilyKind::kTrivialField);
}
