#include "exact/format.hpp"

namespace azinv {

std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string out;
  for (const auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    bool neg = c.field().is_rational() && sgn(c.value()) < 0;
    std::string cs = neg ? (-c).to_string() : c.to_string();
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace azinv
