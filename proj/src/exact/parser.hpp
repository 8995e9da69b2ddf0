#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exact/ring.hpp"

namespace azinv {

// Expressions: integers, + - * /, unary minus, ^ with a signed integer exponent, parentheses,
// ring symbols (x, y, r1.., e1.., t) and product literals (a | b).
Elem parse_element(const RingPtr& ring, std::string_view text);

// "[[a,b],[c,d]]" into rows of entry strings; entries may contain brackets and parentheses.
std::vector<std::vector<std::string>> split_matrix_text(std::string_view text);

}  // namespace azinv
