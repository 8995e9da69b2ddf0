#include "types/type_group.hpp"

#include <set>

#include "exact/errors.hpp"

namespace azinv {

namespace {

std::string pow2(unsigned e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return z.get_str();
}

std::size_t ram_count(const Family& f) { return ramification_points(f).size(); }

bool finite_is_etale(const Family& f) {
  auto a = f.algebra();
  return fixed_ring_is_field(*a) && etale_criterion(*a).etale;
}

}  // namespace

std::vector<RamificationPoint> ramification_points(const Family& f) {
  std::vector<RamificationPoint> out;
  const BaseField& k = f.base();
  switch (f.kind()) {
    case FamilyKind::kTrivialField: out.push_back({"point", std::nullopt, false}); break;
    case FamilyKind::kQuadraticEtale: break;
    case FamilyKind::kLaurent:
      out.push_back({"x=1", Scalar(k, 1), false});
      out.push_back({"x=-1", Scalar(k, -1), false});
      break;
    case FamilyKind::kHyperelliptic:
      for (const auto& a : f.hyperelliptic_ring()->roots()) out.push_back({"(" + a.to_string() + ":0)", a, false});
      if (f.complete()) out.push_back({"infinity", std::nullopt, true});
      break;
    case FamilyKind::kFiniteAlgebra:
      if (f.ring()->involution_is_trivial() && f.ring()->is_field())
        out.push_back({"point", std::nullopt, false});
      else if (!finite_is_etale(f))
        fail(ErrorCode::kUnsupported, "ramification locus of " + f.describe());
      break;
  }
  return out;
}

std::string sign_vector_label(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

CoarseTypeClass identity_class(const FamilyPtr& family) {
  return reduce_to_canonical(NormOneElement(family->ring()->one()), family);
}

CoarseTypeClass reduce_to_canonical(const NormOneElement& n, const FamilyPtr& family) {
  const Elem& eps = n.value();
  require_same_ring(*eps.ring(), *family->ring());
  CoarseTypeClass c;
  c.family = family;
  const Ring& ring = *family->ring();
  auto sign_of_scalar = [&](const Elem& e) -> int {
    auto s = ring.as_scalar(e);
    if (s && s->is_one()) return 1;
    if (s && (-*s).is_one()) return -1;
    fail(ErrorCode::kNotNormOne, eps.to_string() + " is not +1 or -1");
  };
  switch (family->kind()) {
    case FamilyKind::kLaurent: {
      auto m = family->laurent_ring()->as_monomial(eps);
      if (!m) fail(ErrorCode::kNotNormOne, eps.to_string() + " is not a unit");
      long e = ((m->second % 2) + 2) % 2;
      c.representative = family->laurent_ring()->monomial(m->first, e);
      c.label = c.representative->to_string();
      return c;
    }
    case FamilyKind::kHyperelliptic: {
      int s = sign_of_scalar(eps);
      c.representative = ring.from_int(s);
      c.signs.assign(ram_count(*family), s);
      c.label = c.representative->to_string();
      return c;
    }
    case FamilyKind::kTrivialField: {
      c.representative = ring.from_int(sign_of_scalar(eps));
      c.label = c.representative->to_string();
      return c;
    }
    case FamilyKind::kQuadraticEtale: {
      c.hilbert90 = hilbert90_witness(n);
      c.representative = ring.one();
      c.label = "1";
      return c;
    }
    case FamilyKind::kFiniteAlgebra: {
      if (ring.involution_is_trivial() && ring.is_field()) {
        c.representative = ring.from_int(sign_of_scalar(eps));
        c.label = c.representative->to_string();
        return c;
      }
      if (finite_is_etale(*family)) {
        c.hilbert90 = hilbert90_witness(n);
        c.representative = ring.one();
        c.label = "1";
        return c;
      }
      fail(ErrorCode::kUnsupported, "no canonical reduction for " + family->describe());
    }
  }
  fail(ErrorCode::kUnsupported, "unknown family");
}

CoarseTypeClass hyperelliptic_type(const FamilyPtr& family, std::vector<int> signs) {
  if (family->kind() != FamilyKind::kHyperelliptic) fail(ErrorCode::kInvalidArgument, "type vectors need a hyperelliptic family");
  if (signs.size() != ram_count(*family))
    fail(ErrorCode::kInvalidArgument, "type vector needs " + std::to_string(ram_count(*family)) + " signs");
  for (int s : signs)
    if (s != 1 && s != -1) fail(ErrorCode::kInvalidArgument, "type vector entries must be +1 or -1");
  CoarseTypeClass one = identity_class(family);
  one.signs = std::move(signs);
  return multiply(one, identity_class(family));
}

CoarseTypeClass multiply(const CoarseTypeClass& a, const CoarseTypeClass& b) {
  if (a.family->kind() == FamilyKind::kHyperelliptic && !a.signs.empty()) {
    if (a.signs.size() != b.signs.size()) fail(ErrorCode::kRingMismatch, "type vectors of different length");
    CoarseTypeClass c = a;
    for (std::size_t i = 0; i < c.signs.size(); ++i) c.signs[i] *= b.signs[i];
    bool plus = c.signs.front() > 0;
    for (int s : c.signs)
      if ((s > 0) != plus) {
        c.representative.reset();
        c.label = sign_vector_label(c.signs);
        return c;
      }
    c.representative = a.family->ring()->from_int(plus ? 1 : -1);
    c.label = c.representative->to_string();
    return c;
  }
  if (!a.representative || !b.representative) fail(ErrorCode::kUnsupported, "class without a representative");
  return reduce_to_canonical(NormOneElement(*a.representative * *b.representative), a.family);
}

TypeGroupReport coarse_type_group(const FamilyPtr& family) {
  TypeGroupReport r;
  r.family = family->name();
  r.ramification = ramification_points(*family);
  const Ring& ring = *family->ring();
  auto collect = [&](const std::vector<Elem>& norm_one) {
    std::set<std::string> seen;
    std::vector<std::string> reps;
    for (const auto& e : norm_one) {
      auto c = reduce_to_canonical(NormOneElement(e), family);
      if (seen.insert(c.label).second) reps.push_back(c.label);
    }
    return reps;
  };
  switch (family->kind()) {
    case FamilyKind::kLaurent: {
      // N = {+-x^i}; reducing a window of exponents reaches every class.
      auto l = family->laurent_ring();
      std::vector<Elem> sample;
      for (long i = 0; i <= 3; ++i)
        for (int sgn : {1, -1}) sample.push_back(l->monomial(Scalar(l->base(), sgn), i));
      r.representatives = collect(sample);
      r.structure = "Klein four-group (Z/2)^2";
      r.facts.push_back("units of k[x,x^-1] are c*x^i, so N = {+-x^i} and lambda(r)/r ranges over x^(2i)");
      break;
    }
    case FamilyKind::kHyperelliptic: {
      std::size_t m = r.ramification.size();
      r.structure = "(Z/2)^" + std::to_string(m) + ", one sign per ramification point";
      if (m <= 12) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
          std::vector<int> s(m);
          for (std::size_t i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
          r.representatives.push_back(sign_vector_label(s));
        }
      } else {
        r.representatives_truncated = true;
      }
      r.facts.push_back("types correspond to sign functions on the ramification locus");
      r.facts.push_back(family->complete() ? "global functions on the complete curve are the constants"
                                           : "units of the affine coordinate ring are the nonzero constants");
      r.rank = static_cast<unsigned>(m);
      r.order = pow2(r.rank);
      auto st = standard_subgroup(family);
      r.standard_representatives = st.standard_representatives;
      r.standard_order = st.standard_order;
      return r;
    }
    case FamilyKind::kTrivialField:
      r.representatives = collect({ring.one(), ring.from_int(-1)});
      r.structure = "mu_2 = {+1, -1}";
      r.facts.push_back("trivial involution: N = {+-1} and lambda(r)/r = 1");
      break;
    case FamilyKind::kQuadraticEtale:
      r.representatives = {"1"};
      r.structure = "trivial";
      r.facts.push_back("quadratic etale: every norm-one element is a^-1 lambda(a) (Hilbert 90)");
      break;
    case FamilyKind::kFiniteAlgebra:
      if (ring.involution_is_trivial() && ring.is_field()) {
        r.representatives = collect({ring.one(), ring.from_int(-1)});
        r.structure = "mu_2 = {+1, -1}";
      } else if (finite_is_etale(*family)) {
        r.representatives = {"1"};
        r.structure = "trivial";
      } else {
        fail(ErrorCode::kUnsupported, "type group of " + family->describe());
      }
      break;
  }
  std::size_t order = r.representatives.size();
  while ((std::size_t{1} << r.rank) < order) ++r.rank;
  r.order = std::to_string(order);
  auto st = standard_subgroup(family);
  r.standard_representatives = st.standard_representatives;
  r.standard_order = st.standard_order;
  return r;
}

TypeGroupReport standard_subgroup(const FamilyPtr& family) {
  TypeGroupReport r;
  r.family = family->name();
  const Ring& ring = *family->ring();
  // Image of the global norm-one group in T.
  std::vector<Elem> gens;
  switch (family->kind()) {
    case FamilyKind::kLaurent:
      gens = {ring.from_int(-1), family->laurent_ring()->x()};
      r.facts.push_back("global norm-one elements +-x^i");
      break;
    case FamilyKind::kHyperelliptic:
    case FamilyKind::kTrivialField:
      gens = {ring.from_int(-1)};
      r.facts.push_back("global norm-one elements +-1");
      break;
    case FamilyKind::kQuadraticEtale: break;
    case FamilyKind::kFiniteAlgebra:
      if (ring.involution_is_trivial()) gens = {ring.from_int(-1)};
      break;
  }
  std::vector<CoarseTypeClass> group{identity_class(family)};
  for (const auto& g : gens) {
    auto c = reduce_to_canonical(NormOneElement(g), family);
    std::vector<CoarseTypeClass> next = group;
    for (const auto& h : group) {
      auto p = multiply(h, c);
      bool have = false;
      for (const auto& q : next) have = have || q == p;
      if (!have) next.push_back(p);
    }
    group = next;
  }
  for (const auto& c : group) r.standard_representatives.push_back(c.key());
  r.standard_order = std::to_string(group.size());
  r.order = r.standard_order;
  return r;
}

bool is_standard_type(const CoarseTypeClass& t) {
  auto st = standard_subgroup(t.family);
  for (const auto& s : st.standard_representatives)
    if (s == t.key()) return true;
  return false;
}

}  // namespace azinv
