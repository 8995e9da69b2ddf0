// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "exact/errors.hpp"
#include "exact/parser.hpp"
#include "hermitian/hermitian.hpp"
#include "involutions/involution.hpp"
#include "involutive/rings.hpp"
#include "oracles.hpp"
#include "reports/sampling.hpp"
#include "types/type_group.hpp"

using namespace azinv;

namespace {

const BaseField kQ = BaseField::rationals();

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<Scalar> first_roots(long count) {
  std::vector<Scalar> r;
  for (long i = 0; i < count; ++i) r.emplace_back(kQ, i);
  return r;
}

Elem el(const RingPtr& r, const std::string& s) { return parse_element(r, s); }

Outcome mixed_example() {
  Outcome o;
  auto f = Family::laurent(kQ);
  const RingPtr& r = f->ring();
  auto t = coarse_type_group(f);
  std::set<std::string> reps(t.representatives.begin(), t.representatives.end());
  o.require(reps == std::set<std::string>{"1", "-1", "x", "-x"} && t.representatives.size() == 4, "type group is not {1,-1,x,-x}");
  o.require(t.rank == 2, "type group rank");
  auto tau = MatrixInvolution::from_gram(Matrix::parse(r, "[[0,1],[x,0]]"));
  // the displayed involution [[a,b],[c,d]] -> [[d*, x^-1 b*],[x c*, a*]] on a spread of inputs
  sampling::Rng g(1);
  Elem x = el(r, "x");
  for (int i = 0; i < 20; ++i) {
    Matrix m(r, 2, 2);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q)
        m(p, q) = r->from_int(std::uniform_int_distribution<long>(-3, 3)(g)) * x.pow(std::uniform_int_distribution<long>(-3, 3)(g)) +
                  r->from_int(std::uniform_int_distribution<long>(-3, 3)(g));
    Matrix want(r, 2, 2);
    want(0, 0) = m(1, 1).lambda();
    want(0, 1) = x.inverse() * m(0, 1).lambda();
    want(1, 0) = x * m(1, 0).lambda();
    want(1, 1) = m(0, 0).lambda();
    o.require(tau.apply(m) == want, "Gram form differs from the displayed involution");
  }
  std::string want_class = oracle::laurent_class(*f->laurent_ring(), tau.epsilon());
  o.require(want_class == "x", "oracle class of eps");
  o.require(coarse_type(tau, f).label == want_class, "coarse type of the displayed involution");
  auto at1 = specialize(tau, f, parse_point(f, "1"));
  auto atm1 = specialize(tau, f, parse_point(f, "-1"));
  o.require(oracle::fixed_dimension(at1) == 3, "dim of symmetric elements at x=1");
  o.require(oracle::fixed_dimension(atm1) == 1, "dim of symmetric elements at x=-1");
  o.require(classify_first_kind(at1).kind == FirstKind::kOrthogonal, "x=1 is not orthogonal");
  o.require(classify_first_kind(atm1).kind == FirstKind::kSymplectic, "x=-1 is not symplectic");
  return o;
}

Outcome hyperelliptic_counts(long g) {
  Outcome o;
  for (bool complete : {true, false}) {
    auto f = Family::hyperelliptic(kQ, first_roots(2 * g + 1), complete);
    std::size_t m = static_cast<std::size_t>(2 * g + (complete ? 2 : 1));
    auto t = coarse_type_group(f);
    o.require(t.order == std::to_string(1UL << m), "type count for m = " + std::to_string(m));
    o.require(t.representatives.size() == (1UL << m), "listed types");
    o.require(standard_subgroup(f).standard_order == "2", "standard subgroup order");
    // oracle: global norm-one elements are +-1, so the standard vectors are the constant ones
    std::size_t standard = 0;
    for (std::size_t mask = 0; mask < (1UL << m); ++mask) {
      std::vector<int> s(m);
      for (std::size_t i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
      bool constant = mask == 0 || mask == (1UL << m) - 1;
      bool st = is_standard_type(hyperelliptic_type(f, s));
      o.require(st == constant, "standardness of a sign vector");
      standard += st;
    }
    o.require(standard == 2, "exactly two standard types");
  }
  return o;
}

Outcome trivial_dichotomy(int per_case) {
  Outcome o;
  sampling::Rng g(2024);
  for (auto k : {kQ, BaseField::prime(3), BaseField::prime(7), BaseField::prime(101)}) {
    auto f = Family::trivial(k);
    auto t = coarse_type_group(f);
    const Elem one = f->ring()->one();
    o.require(t.representatives == std::vector<std::string>{one.to_string(), (-one).to_string()},
              "T is not {+1,-1} over " + k.name());
  }
  for (auto k : {kQ, BaseField::prime(7)}) {
    auto r = Tower::field(k);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int e : {1, -1}) {
        if (e == -1 && n % 2) {
          // no invertible alternating form in odd degree, so every odd-degree involution is orthogonal
          Matrix h = sampling::matrix(g, r, n, n);
          h = h - h.transpose();
          bool refused = false;
          try {
            MatrixInvolution::from_gram(h);
          } catch (const Error&) {
            refused = true;
          }
          o.require(refused, "odd-degree alternating Gram accepted");
          continue;
        }
        for (int i = 0; i < per_case; ++i) {
          auto tau = MatrixInvolution::from_gram(sampling::hermitian(g, r, n, r->from_int(e)));
          auto res = classify_first_kind(tau);
          std::size_t dim = oracle::fixed_dimension(tau);
          bool orth_by_sign = tau.epsilon() == r->one();
          bool orth_by_dim = dim == n * (n + 1) / 2;
          bool symp_by_dim = dim == n * (n - 1) / 2;
          o.require(orth_by_dim != symp_by_dim, "dimension count is neither n(n+1)/2 nor n(n-1)/2");
          o.require(orth_by_sign == orth_by_dim, "eps sign and dimension count disagree");
          o.require((res.kind == FirstKind::kOrthogonal) == orth_by_dim, "classification disagrees with the count");
          if (n % 2) o.require(res.kind == FirstKind::kOrthogonal, "odd degree classified symplectic");
        }
      }
  }
  return o;
}

Outcome unitary_triviality(int per_ring) {
  Outcome o;
  sampling::Rng g(99);
  auto rand_q = [&] { return Scalar(kQ, mpq_class(std::uniform_int_distribution<long>(-9, 9)(g), std::uniform_int_distribution<long>(1, 7)(g))); };
  auto check = [&](const FamilyPtr& f, const Elem& r) {
    auto w = hilbert90_witness(NormOneElement(r));
    o.require(f->ring()->try_inverse(w.a, nullptr).has_value(), "witness is not a unit");
    o.require(w.a.inverse() * w.a.lambda() == r, "a^-1 lambda(a) != r");
  };
  auto split = Family::quadratic(kQ, Scalar(kQ, 1), Scalar(kQ, 0));
  o.require(coarse_type_group(split).order == "1", "Q x Q type group is not trivial");
  for (int i = 0; i < per_ring; ++i) {
    Scalar a = rand_q();
    if (a.is_zero()) a = Scalar(kQ, 1);
    // (a, 1/a) is norm one for the swap
    auto alg = split->algebra();
    Elem r = alg->from_factors(alg->left()->from_scalar(a), alg->left()->from_scalar(a.inverse()));
    check(split, r);
  }
  for (long d : {-1, 2, 5, -7}) {
    auto f = Family::quadratic_sqrt(kQ, Scalar(kQ, d));
    o.require(coarse_type_group(f).order == "1", "type group over Q(sqrt d) is not trivial");
    Elem root = *f->presentation_root();  // root^2 = d
    for (int i = 0; i < per_ring; ++i) {
      // rational points of u^2 - d v^2 = 1: u = (1 + d s^2)/(1 - d s^2), v = 2s/(1 - d s^2)
      Scalar s = rand_q();
      Scalar den = Scalar(kQ, 1) - Scalar(kQ, d) * s * s;
      if (den.is_zero()) continue;
      Scalar u = (Scalar(kQ, 1) + Scalar(kQ, d) * s * s) / den;
      Scalar v = Scalar(kQ, 2) * s / den;
      Elem r = f->ring()->from_scalar(u) + root.scaled(v);
      if (i % 3 == 0) r = -r;
      o.require((r.lambda() * r).is_one(), "sampled element is not norm one");
      check(f, r);
    }
  }
  return o;
}

// Rebuilds the extension from the printed stage list and checks v^{lambda tr} h v = target there.
bool congruence_holds(const TowerPtr& k, const CongruenceWitness& w, const Matrix& h, const Matrix& target) {
  TowerPtr ext = k;
  for (const auto& t : w.tower) ext = ext->extend(parse_element(ext, t), 1);
  Matrix v = Matrix::parse(ext, w.v.to_string());
  auto lift = [&](const Matrix& m) {
    Matrix out(ext, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ext->lift(m(i, j));
    return out;
  };
  // det(target) is a unit of k, so the identity makes det(v) a unit as well
  return k->try_inverse(target.determinant(), nullptr) && v.lambda_tr() * (lift(h) * v) == lift(target);
}

Outcome hermitian_forms(int per_regime, std::string& summary) {
  Outcome o;
  auto q = Tower::field(kQ);
  auto qi = q->extend(q->from_int(-1), -1);
  std::vector<TowerPtr> fields{q, Tower::field(BaseField::prime(7)), qi};
  sampling::Rng g(7);
  auto pick_n = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(g); };
  std::size_t diag_runs = 0, alt_runs = 0, cong_runs = 0, longest = 0;
  std::string timing;
  for (const auto& k : fields) {
    auto field_start = std::chrono::steady_clock::now();
    std::vector<Elem> epsilons{k->one()};
    if (!k->involution_is_trivial()) epsilons = {k->one(), el(k, "r1"), k->from_int(-1), el(k, "-r1")};
    for (int i = 0; i < per_regime; ++i) {
      Elem eps = epsilons[static_cast<std::size_t>(i) % epsilons.size()];
      std::size_t n = pick_n(1, 8);
      Matrix h = sampling::hermitian(g, k, n, eps);
      auto d = diagonalize(HermitianMatrix(h, eps));
      Matrix dd = d.v.lambda_tr() * h * d.v;
      o.require(oracle::is_diagonal(dd) && k->try_inverse(d.v.determinant(), nullptr).has_value(), "diagonalization witness");
      ++diag_runs;
    }
    if (k->involution_is_trivial()) {
      for (int i = 0; i < per_regime; ++i) {
        std::size_t n = 2 * pick_n(1, 4);
        Matrix h = sampling::hermitian(g, k, n, k->from_int(-1));
        Matrix v = symplectic_normal_form(HermitianMatrix(h, k->from_int(-1)));
        o.require(v.transpose() * h * v == oracle::alternating_standard(k, n), "symplectic witness");
        ++alt_runs;
      }
      epsilons.push_back(k->from_int(-1));
    }
    for (int i = 0; i < per_regime; ++i) {
      Elem eps = epsilons[static_cast<std::size_t>(i) % epsilons.size()];
      bool alt = k->involution_is_trivial() && eps == k->from_int(-1);
      std::size_t n = alt ? 2 * pick_n(1, 4) : pick_n(1, 8);
      Matrix h = sampling::hermitian(g, k, n, eps);
      Matrix p = sampling::invertible(g, k, n, 2);
      Matrix target = p.lambda_tr() * h * p;
      auto w = congruence_witness(HermitianMatrix(h, eps), HermitianMatrix(target, eps));
      o.require(congruence_holds(k, w, h, target), "congruence witness");
      o.require(w.tower.size() <= n, "tower longer than n");
      longest = std::max(longest, w.tower.size());
      ++cong_runs;
    }
    timing += "; " + k->signature() + " " +
              std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - field_start).count()) + " s";
  }
  summary = "diag " + std::to_string(diag_runs) + ", alternating " + std::to_string(alt_runs) + ", congruence " +
            std::to_string(cong_runs) + ", longest tower " + std::to_string(longest) + timing;
  return o;
}

Outcome coarse_type_algebra(int pairs) {
  Outcome o;
  sampling::Rng g(5);
  auto l = Family::laurent(kQ);
  auto lr = l->laurent_ring();
  auto triv = Family::trivial(kQ);
  auto hyp = Family::hyperelliptic(kQ, first_roots(3), true);
  auto qi = Family::quadratic_sqrt(kQ, Scalar(kQ, -1));
  // round trip on generators of N
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long e = -3; e <= 3; ++e)
      for (int s : {1, -1}) {
        Elem eps = lr->monomial(Scalar(kQ, s), e);
        o.require(coarse_type(standard_involution(n, NormOneElement(eps)), l).label == oracle::laurent_class(*lr, eps),
                  "Laurent round trip");
      }
    for (int s : {1, -1}) {
      o.require(coarse_type(standard_involution(n, NormOneElement(triv->ring()->from_int(s))), triv).label == std::to_string(s),
                "trivial round trip");
      auto c = coarse_type(standard_involution(n, NormOneElement(hyp->ring()->from_int(s))), hyp);
      o.require(c.signs == std::vector<int>(4, s), "hyperelliptic round trip");
    }
    for (const char* e : {"r1", "-1", "3/5 + 4/5*r1"})
      o.require(coarse_type(standard_involution(n, NormOneElement(el(qi->ring(), e))), qi).label == "1", "unitary round trip");
  }
  // tensor multiplicativity, with Gram forms moved by random elementary congruences
  auto unit = [&] {
    return lr->monomial(Scalar(kQ, std::uniform_int_distribution<int>(0, 1)(g) ? 1 : -1), std::uniform_int_distribution<long>(-3, 3)(g));
  };
  auto scramble = [&](const Matrix& h) {
    std::size_t n = h.rows();
    Matrix e = Matrix::identity(l->ring(), n);
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(g), j = (i + 1) % n;
    e(i, j) = lr->monomial(Scalar(kQ, 1), std::uniform_int_distribution<long>(-2, 2)(g)) + l->ring()->from_int(1);
    return e.lambda_tr() * h * e;
  };
  for (int i = 0; i < pairs; ++i) {
    Elem e1 = unit(), e2 = unit();
    std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, 2)(g), n2 = std::uniform_int_distribution<std::size_t>(1, 2)(g);
    auto t1 = MatrixInvolution::from_gram(scramble(standard_involution(n1, NormOneElement(e1)).gram()));
    auto t2 = MatrixInvolution::from_gram(scramble(standard_involution(n2, NormOneElement(e2)).gram()));
    auto prod = coarse_type(tensor(t1, t2), l);
    std::string want = oracle::laurent_product(oracle::laurent_class(*lr, e1), oracle::laurent_class(*lr, e2));
    o.require(prod.label == want, "tensor product class");
    o.require(prod == multiply(coarse_type(t1, l), coarse_type(t2, l)), "multiply disagrees with tensor");
  }
  // every class squares to the identity
  for (const auto& f : {l, triv, hyp, qi}) {
    auto t = coarse_type_group(f);
    if (f == hyp) {
      for (std::size_t mask = 0; mask < 16; ++mask) {
        std::vector<int> s(4);
        for (std::size_t b = 0; b < 4; ++b) s[b] = (mask >> b) & 1 ? -1 : 1;
        auto c = hyperelliptic_type(f, s);
        o.require(multiply(c, c) == identity_class(f), "hyperelliptic class squared");
      }
      continue;
    }
    for (const auto& rep : t.representatives) {
      auto c = reduce_to_canonical(NormOneElement(el(f->ring(), rep)), f);
      o.require(multiply(c, c) == identity_class(f), "class squared");
    }
  }
  return o;
}

Outcome structure_fuzz(int count, std::string& summary) {
  Outcome o;
  sampling::Rng g(31337);
  int accepted = 0, etale = 0, local = 0, tries = 0;
  while (accepted < count && tries < 200 * count) {
    ++tries;
    auto a = sampling::algebra(g, kQ, 6);
    if (a->dimension() > 6) {
      o.require(false, "generated algebra of dimension > 6");
      break;
    }
    if (!fixed_ring_is_field(*a)) continue;
    ++accepted;
    std::size_t d = a->dimension();
    auto s = classify_fixed_local(a);
    // fixed ring basis spans ker(lambda - id); oracle: trace form on S is nondegenerate (S reduced)
    std::vector<Coeffs> sb;
    for (const auto& e : s.fixed_basis) {
      o.require(e.lambda() == e, "fixed basis element moved by lambda");
      sb.push_back(a->coordinates(e));
    }
    ScalarMatrix tr(kQ, sb.size(), sb.size());
    for (std::size_t i = 0; i < sb.size(); ++i)
      for (std::size_t j = 0; j < sb.size(); ++j) {
        ScalarMatrix m = a->regular_matrix(s.fixed_basis[i] * s.fixed_basis[j]);
        Scalar t(kQ, 0);
        for (std::size_t c = 0; c < d; ++c) t += m(c, c);
        tr(i, j) = t;
      }
    o.require(tr.rank() == sb.size(), "fixed ring is not reduced");
    // the ideals: proper, closed under multiplication, permuted by lambda
    o.require(!s.ideals.empty() && s.ideals.size() <= 2, "maximal ideal count");
    std::vector<std::size_t> ranks;
    for (const auto& id : s.ideals) {
      std::size_t rk = oracle::rank_of(kQ, id, d);
      o.require(rk < d, "ideal is not proper");
      for (const auto& v : id)
        for (std::size_t b = 0; b < d; ++b) {
          Coeffs prod = a->coordinates(a->from_coordinates(v) * a->basis(b));
          auto ext = id;
          ext.push_back(prod);
          o.require(oracle::rank_of(kQ, ext, d) == rk, "ideal not closed under multiplication");
        }
      std::vector<Coeffs> image;
      for (const auto& v : id) image.push_back(a->coordinates(a->from_coordinates(v).lambda()));
      bool found = false;
      for (const auto& other : s.ideals) {
        auto both = other;
        both.insert(both.end(), image.begin(), image.end());
        found = found || oracle::rank_of(kQ, both, d) == oracle::rank_of(kQ, other, d);
      }
      o.require(found, "lambda does not permute the maximal ideals");
    }
    if (s.verdict == LocalVerdict::kQuadraticEtaleOverFixed) {
      ++etale;
      const auto& p = s.presentation;
      o.require(p.etale && a->try_inverse(p.r - p.r.lambda(), nullptr).has_value(), "presentation element");
      o.require((p.r * p.r - p.trace * p.r + p.norm).is_zero(), "presentation relation");
      // R = S + S r
      std::vector<Coeffs> span = sb;
      for (const auto& e : s.fixed_basis) span.push_back(a->coordinates(e * p.r));
      o.require(oracle::rank_of(kQ, span, d) == d && 2 * sb.size() == d, "R is not S + S r");
    } else {
      ++local;
      o.require(s.ideals.size() == 1 && s.residue_involution_trivial, "local verdict evidence");
      // no basis element or pairwise sum has r - lambda(r) invertible
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          Elem r = a->basis(i) + (i == j ? a->zero() : a->basis(j));
          o.require(!a->try_inverse(r - r.lambda(), nullptr), "local verdict but an etale witness exists");
        }
    }
  }
  o.require(accepted == count, "too few algebras with field fixed ring");
  summary = std::to_string(accepted) + " algebras (" + std::to_string(etale) + " etale, " + std::to_string(local) +
            " local) from " + std::to_string(tries) + " draws";
  return o;
}

int failures = 0;
int only = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome(std::string&)>& f) {
  if (only && only != id) return;
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string info;
  try {
    o = f(info);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool pass = o.ok && in_time;
  failures += !pass;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << s << " s";
  if (limit_s > 0) line << ", limit " << limit_s << " s";
  line << ")";
  if (!info.empty()) line << " " << info;
  if (!o.ok) line << " -- " << o.detail;
  if (!in_time) line << " -- over time limit";
  std::puts(line.str().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) only = std::atoi(argv[1]);
  report(1, "mixed example: Klein four type group, class x, orthogonal at 1, symplectic at -1", 1.0,
         [](std::string&) { return mixed_example(); });
  report(2, "hyperelliptic counts g = 1, 2, 3 (complete 2^(2g+2), affine 2^(2g+1), 2 standard)", 0, [](std::string& info) {
    Outcome all;
    for (long g = 1; g <= 3; ++g) {
      auto start = std::chrono::steady_clock::now();
      Outcome o = hyperelliptic_counts(g);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      all.require(o.ok, "g=" + std::to_string(g) + ": " + o.detail);
      all.require(s < 1.0, "g=" + std::to_string(g) + " took " + std::to_string(s) + " s");
      info += "g=" + std::to_string(g) + " " + std::to_string(s) + " s; ";
    }
    return all;
  });
  report(3, "trivial involution dichotomy: T = {+-1}, 200 forms per (n, eps), n <= 6, Q and F7", 0,
         [](std::string&) { return trivial_dichotomy(200); });
  report(4, "unitary triviality and Hilbert 90 over Q x Q and Q(sqrt d), d in {-1, 2, 5, -7}", 5.0,
         [](std::string&) { return unitary_triviality(200); });
  report(5, "hermitian normal forms: 500 round trips per regime over Q, F7, Q(i), n <= 8", 0,
         [](std::string& info) { return hermitian_forms(500, info); });
  report(6, "coarse type algebra: standard round trip, tensor multiplicativity, 2-torsion", 0,
         [](std::string&) { return coarse_type_algebra(200); });
  report(7, "structure fuzz: 300 algebras with field fixed ring, dim <= 6", 10.0,
         [](std::string& info) { return structure_fuzz(300, info); });
  return failures == 0 ? 0 : 1;
}
