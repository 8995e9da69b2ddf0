#include "involutive/rings.hpp"

#include "exact/errors.hpp"
#include "exact/format.hpp"
#include "exact/linalg.hpp"

namespace azinv {

namespace {

// Basis elements, then pairwise sums.
std::vector<Elem> search_space(const Ring& r) {
  std::vector<Elem> out;
  std::size_t d = r.dimension();
  for (std::size_t i = 0; i < d; ++i) out.push_back(r.basis(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) out.push_back(r.add(r.basis(i), r.basis(j)));
  return out;
}

bool is_unit(const Elem& e) { return e.ring()->try_inverse(e, nullptr).has_value(); }

bool fixed(const Elem& e) { return e.lambda() == e; }

}  // namespace

bool is_quadratic_etale_presentation(const Elem& alpha, const Elem& beta) {
  Elem disc = alpha * alpha - beta * alpha.ring()->from_int(4);
  return is_unit(disc);
}

std::string EtalePresentation::polynomial() const {
  if (!etale) return "";
  auto ts = trace.ring()->as_scalar(trace);
  auto ns = norm.ring()->as_scalar(norm);
  if (ts && ns) {
    BaseField k = trace.ring()->base();
    return format_terms({{Scalar(k, 1), "x^2"}, {-*ts, "x"}, {*ns, ""}});
  }
  return "x^2 - (" + trace.to_string() + ")*x + (" + norm.to_string() + ")";
}

EtalePresentation etale_criterion(const Ring& ring) {
  EtalePresentation p;
  std::vector<Elem> sbasis = fixed_basis(ring);
  std::size_t d = ring.dimension();
  for (const Elem& r : search_space(ring)) {
    if (!is_unit(r - r.lambda())) {
      p.searched.push_back(r.to_string());
      continue;
    }
    Elem t = r + r.lambda();
    Elem n = r.lambda() * r;
    if (!fixed(t) || !fixed(n)) fail(ErrorCode::kVerificationFailed, "trace or norm of " + r.to_string() + " not fixed");
    if (!(r * r - t * r + n).is_zero()) fail(ErrorCode::kVerificationFailed, "r is not a root of its presentation");
    // R = S + S r
    std::vector<Coeffs> gens;
    for (const auto& s : sbasis) {
      gens.push_back(ring.coordinates(s));
      gens.push_back(ring.coordinates(s * r));
    }
    if (2 * sbasis.size() != d || span_basis(ring.base(), d, gens).size() != d)
      fail(ErrorCode::kVerificationFailed, "{1, r} does not span R over S for r = " + r.to_string());
    p.etale = true;
    p.r = r;
    p.trace = t;
    p.norm = n;
    p.searched.clear();
    return p;
  }
  return p;
}

std::string verdict_name(LocalVerdict v) {
  return v == LocalVerdict::kQuadraticEtaleOverFixed ? "QuadraticEtaleOverFixed" : "LocalNotEtale";
}

namespace {

ScalarMatrix map_matrix(const FiniteAlgebra& a, const QuotientMap& q, const std::vector<Elem>& elems) {
  std::size_t m = q.target->dimension();
  ScalarMatrix out(a.base(), m, elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    Coeffs col = q.target->coordinates(q.apply(a.coordinates(elems[j])));
    for (std::size_t i = 0; i < m; ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace

bool fixed_ring_is_field(const FiniteAlgebra& a) {
  auto sb = fixed_basis(a);
  for (const auto& q : a.maximal_ideals())
    if (map_matrix(a, q, sb).rank() != sb.size()) return false;
  return true;
}

StructureReport classify_fixed_local(const AlgebraPtr& a) {
  StructureReport rep;
  rep.fixed_basis = fixed_basis(*a);
  rep.quotient_maps = a->maximal_ideals();
  // S is a field iff each quotient map is injective on S: then every maximal ideal of S is 0.
  for (const auto& q : rep.quotient_maps)
    if (map_matrix(*a, q, rep.fixed_basis).rank() != rep.fixed_basis.size())
      fail(ErrorCode::kFixedRingNotField, "fixed subring of " + a->signature() + " is not a field");

  bool has_fixed_unit_trace = false;
  for (const Elem& r : search_space(*a))
    if (is_unit(r + r.lambda())) {
      has_fixed_unit_trace = true;
      break;
    }
  if (!has_fixed_unit_trace)
    fail(ErrorCode::kCharacteristicTwo, "no r with r + lambda(r) invertible: residue characteristic 2");

  rep.radical = a->radical();
  for (const auto& q : rep.quotient_maps) rep.ideals.push_back(a->ideal_of(q));
  std::size_t d = a->dimension();
  rep.residue_involution_trivial = true;
  for (const auto& q : rep.quotient_maps) {
    QuotientMap ql{q.target, {}};
    for (std::size_t j = 0; j < d; ++j) ql.images.push_back(q.apply(a->coordinates(a->basis(j).lambda())));
    for (std::size_t j = 0; j < d; ++j)
      if (!(ql.images[j] == q.images[j])) rep.residue_involution_trivial = false;
    auto ker = a->ideal_of(ql);
    int found = -1;
    for (std::size_t i = 0; i < rep.ideals.size(); ++i)
      if (rep.ideals[i] == ker) found = static_cast<int>(i);
    rep.lambda_image.push_back(found);
    if (found < 0) rep.lambda_stable = false;
  }

  rep.presentation = etale_criterion(*a);
  std::size_t count = rep.quotient_maps.size();
  if (rep.presentation.etale) {
    rep.verdict = LocalVerdict::kQuadraticEtaleOverFixed;
    bool ok = (count == 2 && rep.lambda_image == std::vector<int>{1, 0}) ||
              (count == 1 && !rep.residue_involution_trivial);
    if (!ok) fail(ErrorCode::kVerificationFailed, "etale verdict without the expected residue behaviour");
  } else {
    rep.verdict = LocalVerdict::kLocalNotEtale;
    if (count != 1 || !rep.residue_involution_trivial)
      fail(ErrorCode::kVerificationFailed, "local verdict without a unique maximal ideal and trivial residue involution");
  }
  return rep;
}

Hilbert90Witness hilbert90_witness(const NormOneElement& rn) {
  const Elem& r = rn.value();
  const Ring& ring = *r.ring();
  std::vector<Elem> candidates{ring.one()};
  if (ring.dimension() > 0) {
    for (const auto& e : search_space(ring)) candidates.push_back(e);
  } else if (auto g = ring.nonfixed_generator()) {
    candidates.push_back(*g);
    candidates.push_back(ring.one() + *g);
  }
  for (const Elem& x : candidates) {
    Elem t = x + x.lambda() * r;
    auto tinv = ring.try_inverse(t, nullptr);
    if (!tinv) continue;
    // r = 1 admits the trivial witness a = 1.
    Elem a = r.is_one() ? ring.one() : *tinv;
    if (!(a.inverse() * a.lambda() == r))
      fail(ErrorCode::kVerificationFailed, "Hilbert 90 witness failed for r = " + r.to_string());
    return {a, x, t};
  }
  std::string tried;
  for (const auto& x : candidates) tried += (tried.empty() ? "" : ", ") + x.to_string();
  fail(ErrorCode::kHypothesisViolated,
       "no x with x + lambda(x) r invertible among {" + tried + "}; " + ring.signature() +
           " is not quadratic etale over its fixed ring");
}

NormTrace norm_trace(const Elem& r) {
  NormTrace nt{r.lambda() * r, r + r.lambda()};
  if (!fixed(nt.norm) || !fixed(nt.trace))
    fail(ErrorCode::kVerificationFailed, "norm or trace of " + r.to_string() + " is not fixed");
  return nt;
}

}  // namespace azinv
