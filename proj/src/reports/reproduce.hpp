#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace azinv::reports {

// Named worked examples and seeded property suites; each check records expected/got.
std::vector<std::string> reproduce_names();
nlohmann::json reproduce(const std::string& name, std::uint64_t seed, int count);

}  // namespace azinv::reports
