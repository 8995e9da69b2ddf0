#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exact/finite_algebra.hpp"
#include "exact/matrix.hpp"
#include "involutive/family.hpp"

namespace azinv::reports {

using json = nlohmann::json;

// Family descriptor -> family; see docs/jobspec.schema.json.
FamilyPtr family_from_json(const json& j);
AlgebraPtr algebra_from_json(const BaseField& k, const json& j);
json algebra_to_json(const FiniteAlgebra& a);

Elem element_from_json(const RingPtr& ring, const json& j);
Matrix matrix_from_json(const RingPtr& ring, const json& j);
json matrix_to_json(const Matrix& m);

// Runs one JobSpec. Domain errors become {"error": {"code", "message"}, "verified": false}.
json run_job(const json& spec);
// Jobs run concurrently; reports come back in input order.
std::vector<json> run_batch(const std::vector<json>& specs);

json error_report(const json& spec, const std::string& code, const std::string& message);

}  // namespace azinv::reports
