#include "reports/reproduce.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "exact/errors.hpp"
#include "exact/parser.hpp"
#include "hermitian/hermitian.hpp"
#include "involutions/involution.hpp"
#include "involutive/rings.hpp"
#include "reports/sampling.hpp"
#include "types/type_group.hpp"

namespace azinv::reports {

using json = nlohmann::json;

namespace {

class Checks {
 public:
  template <class T>
  void expect(const std::string& name, const T& expected, const T& got) {
    json e = expected, g = got;
    items_.push_back({{"name", name}, {"expected", e}, {"got", g}, {"pass", e == g}});
  }
  void expect_true(const std::string& name, bool ok, const std::string& detail = "") {
    json c = {{"name", name}, {"expected", true}, {"got", ok}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    items_.push_back(c);
  }
  // Runs f and records its error code, or "none".
  void expect_error(const std::string& name, ErrorCode code, const std::function<void()>& f) {
    std::string got = "none";
    try {
      f();
    } catch (const Error& e) {
      got = std::string(error_code_name(e.code()));
    }
    expect(name, std::string(error_code_name(code)), got);
  }
  bool pass() const {
    for (const auto& c : items_)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
  const json& items() const { return items_; }

 private:
  json items_ = json::array();
};

const BaseField kQ = BaseField::rationals();

std::vector<Scalar> first_roots(long count) {
  std::vector<Scalar> r;
  for (long i = 0; i < count; ++i) r.emplace_back(kQ, i);
  return r;
}

void mixed_example(Checks& c, sampling::Rng&, int) {
  auto f = Family::laurent(kQ);
  const RingPtr& r = f->ring();
  auto t = coarse_type_group(f);
  c.expect("type group order", std::string("4"), t.order);
  c.expect("type group representatives", std::vector<std::string>{"1", "-1", "x", "-x"}, t.representatives);
  auto tau = MatrixInvolution::from_gram(Matrix::parse(r, "[[0,1],[x,0]]"));
  // the mixed involution on a generic-looking matrix: [[a,b],[c,d]] -> [[d*, x^-1 b*],[x c*, a*]]
  Matrix m = Matrix::parse(r, "[[1 + x, 2*x^2 - 1],[x^-3, 5 - x]]");
  Matrix expected = Matrix::parse(r, "[[5 - x^-1, x^-1*(2*x^-2 - 1)],[x*x^3, 1 + x^-1]]");
  c.expect_true("Gram form [[0,1],[x,0]] reproduces the displayed involution", tau.apply(m) == expected);
  c.expect("epsilon", std::string("x^-1"), tau.epsilon().to_string());
  c.expect("coarse type", std::string("x"), coarse_type(tau, f).label);
  auto at1 = specialize(tau, f, parse_point(f, "1"));
  auto atm1 = specialize(tau, f, parse_point(f, "-1"));
  c.expect("kind at x=1", std::string("Orthogonal"), first_kind_name(classify_first_kind(at1).kind));
  c.expect("kind at x=-1", std::string("Symplectic"), first_kind_name(classify_first_kind(atm1).kind));
  for (const auto& rep : t.representatives) {
    auto s = standard_involution(1, NormOneElement(parse_element(r, rep)));
    c.expect("degree-2 model of type " + rep, rep, coarse_type(s, f).label);
  }
}

void symplectic_model(Checks& c, sampling::Rng&, int) {
  auto f = Family::trivial(kQ);
  const RingPtr& r = f->ring();
  c.expect("type group", std::vector<std::string>{"1", "-1"}, coarse_type_group(f).representatives);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto syp = standard_involution(n, NormOneElement(r->from_int(-1)));
    auto fk = classify_first_kind(syp);
    std::string deg = std::to_string(2 * n);
    c.expect("kind in degree " + deg, std::string("Symplectic"), first_kind_name(fk.kind));
    c.expect("dim ker(tau - id) in degree " + deg, n * (2 * n - 1), fk.symmetric_dimension);
    c.expect("coarse type in degree " + deg, std::string("-1"), coarse_type(syp, f).label);
    auto orth = standard_involution(n, NormOneElement(r->one()));
    c.expect("orthogonal model in degree " + deg, std::string("Orthogonal"), first_kind_name(classify_first_kind(orth).kind));
  }
  c.expect_true("symplectic type is standard", is_standard_type(reduce_to_canonical(NormOneElement(r->from_int(-1)), f)));
  c.expect_error("odd degree alternating form", ErrorCode::kOddDimensionAlternating,
                 [&] { HermitianMatrix(Matrix(r, 3, 3), r->from_int(-1)); });
}

void unitary_triviality(Checks& c, sampling::Rng& g, int count) {
  std::vector<FamilyPtr> fams{Family::quadratic(kQ, Scalar(kQ, 1), Scalar(kQ, 0))};
  for (long d : {-1, 2, 5, -7}) fams.push_back(Family::quadratic_sqrt(kQ, Scalar(kQ, d)));
  for (const auto& f : fams) {
    std::string name = f->ring()->signature();
    c.expect("type group order over " + name, std::string("1"), coarse_type_group(f).order);
    int ok = 0;
    for (int i = 0; i < count; ++i) {
      Elem r = sampling::norm_one(g, f->ring());
      auto w = hilbert90_witness(NormOneElement(r));
      ok += w.a.inverse() * w.a.lambda() == r;
    }
    c.expect("Hilbert 90 witnesses over " + name, count, ok);
  }
  auto qi = Family::quadratic_sqrt(kQ, Scalar(kQ, -1));
  auto ct = reduce_to_canonical(NormOneElement(parse_element(qi->ring(), "r1")), qi);
  c.expect("class of i", std::string("1"), ct.label);
  c.expect_true("witness for i", ct.hilbert90 && ct.hilbert90->a.inverse() * ct.hilbert90->a.lambda() == parse_element(qi->ring(), "r1"));
}

void hyperelliptic_counts(Checks& c, sampling::Rng&, int) {
  for (long g = 1; g <= 3; ++g)
    for (bool complete : {true, false}) {
      auto f = Family::hyperelliptic(kQ, first_roots(2 * g + 1), complete);
      std::string tag = "g=" + std::to_string(g) + (complete ? " complete" : " affine");
      auto t = coarse_type_group(f);
      c.expect("types " + tag, std::to_string(1L << (2 * g + (complete ? 2 : 1))), t.order);
      c.expect("standard " + tag, std::string("2"), standard_subgroup(f).standard_order);
      auto s = standard_involution(1, NormOneElement(f->ring()->from_int(-1)));
      auto tv = type_vector(s, f);
      bool all_minus = true;
      for (const auto& e : tv.entries) all_minus = all_minus && e.second == -1;
      c.expect_true("symplectic model has type vector (-1,...,-1) " + tag, all_minus && tv.entries.size() == std::size_t(2 * g + 1));
    }
}

void split_model(Checks& c, sampling::Rng&, int) {
  std::vector<FamilyPtr> fams{Family::trivial(kQ), Family::laurent(kQ), Family::hyperelliptic(kQ, first_roots(3), true)};
  for (const auto& f : fams) {
    std::vector<Elem> gens{f->ring()->one(), f->ring()->from_int(-1)};
    if (f->kind() == FamilyKind::kLaurent) {
      gens.push_back(parse_element(f->ring(), "x"));
      gens.push_back(parse_element(f->ring(), "-x"));
    }
    for (const auto& e : gens)
      for (std::size_t n = 1; n <= 3; ++n) {
        auto tau = standard_involution(n, NormOneElement(e));
        auto want = reduce_to_canonical(NormOneElement(e), f);
        c.expect("ct(h_" + std::to_string(2 * n) + "(" + e.to_string() + ")) over " + f->name(), want.key(), coarse_type(tau, f).key());
        // h^{lambda tr} = lambda(eps) h, and the class of lambda(eps) = eps^-1 equals that of eps
        c.expect_true("h^{lambda tr} = eps^-1 h for " + e.to_string(), tau.gram().lambda_tr() == tau.gram().scaled(e.lambda()));
      }
  }
}

void trivial_dichotomy(Checks& c, sampling::Rng& g, int count) {
  for (auto k : {kQ, BaseField::prime(7)}) {
    auto r = Tower::field(k);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int e : {1, -1}) {
        if (e == -1 && n % 2) continue;
        int ok = 0;
        for (int i = 0; i < count; ++i) {
          auto tau = MatrixInvolution::from_gram(sampling::hermitian(g, r, n, r->from_int(e)));
          auto fk = classify_first_kind(tau);
          ok += (fk.kind == FirstKind::kOrthogonal) == (e == 1);
        }
        c.expect("n=" + std::to_string(n) + " eps=" + std::to_string(e) + " over " + k.name(), count, ok);
      }
  }
}

void hermitian_roundtrip(Checks& c, sampling::Rng& g, int count) {
  auto q = Tower::field(kQ);
  std::vector<TowerPtr> fields{q, Tower::field(BaseField::prime(7)), q->extend(q->from_int(-1), -1)};
  for (const auto& k : fields) {
    int ok = 0;
    for (int i = 0; i < count; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i) % 4;
      Elem eps = k->one();
      Matrix h = sampling::hermitian(g, k, n, eps);
      Matrix p = sampling::invertible(g, k, n);
      Matrix h2 = p.lambda_tr() * h * p;
      auto w = congruence_witness(HermitianMatrix(h, eps), HermitianMatrix(h2, eps));
      ok += w.tower.size() <= n;
    }
    c.expect("congruence witnesses over " + k->signature(), count, ok);
  }
}

void structure_fuzz(Checks& c, sampling::Rng& g, int count) {
  int accepted = 0, ok = 0;
  for (int tries = 0; accepted < count && tries < 100 * count; ++tries) {
    auto a = sampling::algebra(g, kQ, 6);
    if (!fixed_ring_is_field(*a)) continue;
    ++accepted;
    auto s = classify_fixed_local(a);
    bool consistent = s.ideals.size() <= 2 && s.lambda_stable;
    ok += consistent;
  }
  c.expect("algebras with field fixed ring classified", count, accepted);
  c.expect("verdicts with <= 2 lambda-stable maximal ideals", accepted, ok);
}

using Runner = void (*)(Checks&, sampling::Rng&, int);

const std::map<std::string, std::pair<Runner, int>>& table() {
  static const std::map<std::string, std::pair<Runner, int>> t{
      {"mixed-example", {mixed_example, 0}},
      {"symplectic-model", {symplectic_model, 0}},
      {"unitary-triviality", {unitary_triviality, 20}},
      {"hyperelliptic-counts", {hyperelliptic_counts, 0}},
      {"split-model", {split_model, 0}},
      {"trivial-dichotomy", {trivial_dichotomy, 10}},
      {"hermitian-roundtrip", {hermitian_roundtrip, 20}},
      {"structure-fuzz", {structure_fuzz, 50}},
  };
  return t;
}

}  // namespace

std::vector<std::string> reproduce_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : table()) names.push_back(k);
  return names;
}

json reproduce(const std::string& name, std::uint64_t seed, int count) {
  auto it = table().find(name);
  if (it == table().end()) {
    std::string all;
    for (const auto& n : reproduce_names()) all += (all.empty() ? "" : ", ") + n;
    fail(ErrorCode::kInvalidArgument, "unknown example \"" + name + "\"; known: " + all);
  }
  if (count <= 0) count = it->second.second;
  auto start = std::chrono::steady_clock::now();
  Checks c;
  sampling::Rng g(seed);
  it->second.first(c, g, count);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json r = {{"example", name}, {"checks", c.items()}, {"pass", c.pass()}, {"verified", c.pass()}, {"elapsed_ms", ms}};
  if (it->second.second > 0) {
    r["seed"] = seed;
    r["count"] = count;
  }
  return r;
}

}  // namespace azinv::reports
