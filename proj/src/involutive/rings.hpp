#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/finite_algebra.hpp"
#include "involutive/family.hpp"

namespace azinv {

// alpha^2 - 4 beta is a unit of the ring containing alpha and beta.
bool is_quadratic_etale_presentation(const Elem& alpha, const Elem& beta);

struct EtalePresentation {
  bool etale = false;
  Elem r, trace, norm;            // t_r = r + lambda(r), n_r = lambda(r) r
  std::vector<std::string> searched;  // candidates tried when not etale
  std::string polynomial() const;     // x^2 - t_r x + n_r
};

// Searches basis elements, then pairwise sums, for r with r - lambda(r) a unit, and verifies
// R = S + S r with r^2 - t_r r + n_r = 0.
EtalePresentation etale_criterion(const Ring& r);

enum class LocalVerdict { kQuadraticEtaleOverFixed, kLocalNotEtale };

struct StructureReport {
  LocalVerdict verdict;
  EtalePresentation presentation;
  std::vector<Elem> fixed_basis;
  std::vector<std::vector<Coeffs>> ideals;  // canonical bases of the maximal ideals
  std::vector<QuotientMap> quotient_maps;
  std::vector<int> lambda_image;           // ideal i is sent to ideal lambda_image[i]
  bool lambda_stable = true;
  bool residue_involution_trivial = false;  // lambda-bar = id on R/Jac(R)
  std::vector<Coeffs> radical;
};

std::string verdict_name(LocalVerdict v);

// Requires the fixed ring to be a field; throws FixedRingNotField otherwise.
StructureReport classify_fixed_local(const AlgebraPtr& a);
// Whether every quotient map restricts injectively to the fixed ring.
bool fixed_ring_is_field(const FiniteAlgebra& a);

struct Hilbert90Witness {
  Elem a, x, t;  // t = x + lambda(x) r, a = t^-1 (a = 1 when r = 1), a^-1 lambda(a) = r
};

Hilbert90Witness hilbert90_witness(const NormOneElement& r);

struct NormTrace {
  Elem norm, trace;
};
NormTrace norm_trace(const Elem& r);

}  // namespace azinv
