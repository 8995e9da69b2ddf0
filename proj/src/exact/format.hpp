#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exact/scalar.hpp"

namespace azinv {

// Joins coefficient/monomial pairs as "c1*m1 + c2*m2 - ..."; an empty monomial is a constant term.
std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace azinv
