#pragma once

#include <optional>
#include <string>
#include <vector>

#include "involutive/family.hpp"
#include "involutive/rings.hpp"

namespace azinv {

struct RamificationPoint {
  std::string label;         // "x=1", "x=-1", "(0:0)", "infinity", "point"
  std::optional<Scalar> x;   // coordinate where evaluation is defined
  bool infinity = false;
};

std::vector<RamificationPoint> ramification_points(const Family& f);

std::string sign_vector_label(const std::vector<int>& signs);

// A class in T = N / {lambda(r) r^-1}.
struct CoarseTypeClass {
  FamilyPtr family;
  std::string label;                  // canonical representative, e.g. "x", "-1", "1"
  std::optional<Elem> representative; // norm-one representative when the family has one
  std::vector<int> signs;             // hyperelliptic type vector, one sign per ramification point
  std::optional<Hilbert90Witness> hilbert90;  // quadratic families: why the class is trivial

  // Sign vector for hyperelliptic families, label otherwise.
  std::string key() const { return signs.empty() ? label : sign_vector_label(signs); }
  bool operator==(const CoarseTypeClass& o) const { return key() == o.key(); }
};

CoarseTypeClass reduce_to_canonical(const NormOneElement& eps, const FamilyPtr& family);
CoarseTypeClass multiply(const CoarseTypeClass& a, const CoarseTypeClass& b);
CoarseTypeClass identity_class(const FamilyPtr& family);
// Hyperelliptic type given directly by its type vector.
CoarseTypeClass hyperelliptic_type(const FamilyPtr& family, std::vector<int> signs);

struct TypeGroupReport {
  std::string family;
  std::string structure;
  unsigned rank = 0;           // T is an elementary abelian 2-group of this rank
  std::string order;           // decimal, 2^rank
  std::vector<std::string> representatives;  // omitted above 2^12 elements
  bool representatives_truncated = false;
  std::vector<RamificationPoint> ramification;
  std::vector<std::string> standard_representatives;
  std::string standard_order;
  std::vector<std::string> facts;  // unit-group facts the computation relies on
};

TypeGroupReport coarse_type_group(const FamilyPtr& family);
TypeGroupReport standard_subgroup(const FamilyPtr& family);
bool is_standard_type(const CoarseTypeClass& t);

}  // namespace azinv
