#include "azinv/azinv.h"

#include <cstring>
#include <string>

#include "exact/errors.hpp"
#include "exact/parser.hpp"
#include "involutive/rings.hpp"
#include "reports/jobs.hpp"
#include "reports/reproduce.hpp"

struct azinv_family {
  azinv::FamilyPtr family;
};

struct azinv_element {
  azinv::Elem value;
};

namespace {

thread_local std::string last_error;

azinv_status set_error(azinv_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

azinv_status status_of_name(const std::string& name) {
  for (int c = 1; c <= 16; ++c)
    if (azinv::error_code_name(static_cast<azinv::ErrorCode>(c)) == name) return static_cast<azinv_status>(c);
  return AZINV_INTERNAL;
}

template <class F>
azinv_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return AZINV_OK;
  } catch (const azinv::Error& e) {
    return set_error(static_cast<azinv_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(AZINV_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return set_error(AZINV_INTERNAL, e.what());
  }
}

azinv_status report_status(const nlohmann::json& r) {
  if (r.contains("error")) {
    last_error = r["error"]["message"].get<std::string>();
    return status_of_name(r["error"]["code"].get<std::string>());
  }
  if (!r.value("verified", false)) return set_error(AZINV_VERIFICATION_FAILED, "report did not verify");
  return AZINV_OK;
}

template <class F>
azinv_status unary(const azinv_element* a, azinv_element** out, F&& f) {
  if (!a || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new azinv_element{f(a->value)}; });
}

template <class F>
azinv_status binary(const azinv_element* a, const azinv_element* b, azinv_element** out, F&& f) {
  if (!a || !b || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new azinv_element{f(a->value, b->value)}; });
}

}  // namespace

extern "C" {

const char* azinv_version(void) { return "1.0.0"; }

const char* azinv_status_name(azinv_status status) {
  if (status == AZINV_OK) return "OK";
  if (status >= 1 && status <= 16) return azinv::error_code_name(static_cast<azinv::ErrorCode>(status)).data();
  return "Internal";
}

const char* azinv_last_error_message(void) { return last_error.c_str(); }

void azinv_string_free(char* s) { std::free(s); }

azinv_status azinv_family_create(const char* descriptor, azinv_family** out) {
  if (!descriptor || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto j = nlohmann::json::parse(descriptor);
    *out = new azinv_family{azinv::reports::family_from_json(j)};
  });
}

void azinv_family_destroy(azinv_family* family) { delete family; }

azinv_status azinv_family_describe(const azinv_family* family, char** out) {
  if (!family || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(family->family->describe()); });
}

azinv_status azinv_element_parse(const azinv_family* family, const char* text, azinv_element** out) {
  if (!family || !text || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new azinv_element{azinv::parse_element(family->family->ring(), text)}; });
}

void azinv_element_destroy(azinv_element* e) { delete e; }

azinv_status azinv_element_to_string(const azinv_element* e, char** out) {
  if (!e || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(e->value.to_string()); });
}

azinv_status azinv_element_add(const azinv_element* a, const azinv_element* b, azinv_element** out) {
  return binary(a, b, out, [](const azinv::Elem& x, const azinv::Elem& y) { return x + y; });
}

azinv_status azinv_element_mul(const azinv_element* a, const azinv_element* b, azinv_element** out) {
  return binary(a, b, out, [](const azinv::Elem& x, const azinv::Elem& y) { return x * y; });
}

azinv_status azinv_element_neg(const azinv_element* a, azinv_element** out) {
  return unary(a, out, [](const azinv::Elem& x) { return -x; });
}

azinv_status azinv_element_invert(const azinv_element* a, azinv_element** out) {
  return unary(a, out, [](const azinv::Elem& x) { return x.inverse(); });
}

azinv_status azinv_element_involution(const azinv_element* a, azinv_element** out) {
  return unary(a, out, [](const azinv::Elem& x) { return x.lambda(); });
}

azinv_status azinv_element_norm_trace(const azinv_element* a, azinv_element** norm, azinv_element** trace) {
  if (!a || !norm || !trace) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto nt = azinv::norm_trace(a->value);
    *norm = new azinv_element{nt.norm};
    *trace = new azinv_element{nt.trace};
  });
}

azinv_status azinv_element_equal(const azinv_element* a, const azinv_element* b, int* out) {
  if (!a || !b || !out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    azinv::require_same_ring(*a->value.ring(), *b->value.ring());
    *out = a->value == b->value;
  });
}

azinv_status azinv_run_job(const char* spec, char** report) {
  if (!spec) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  last_error.clear();
  nlohmann::json r;
  try {
    r = azinv::reports::run_job(nlohmann::json::parse(spec));
  } catch (const nlohmann::json::exception& e) {
    r = azinv::reports::error_report(nullptr, "ParseError", e.what());
  } catch (const std::exception& e) {
    r = azinv::reports::error_report(nullptr, "Internal", e.what());
  }
  if (report) *report = dup(r.dump());
  return report_status(r);
}

azinv_status azinv_run_batch(const char* specs, char** reports) {
  if (!specs) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  last_error.clear();
  nlohmann::json out = nlohmann::json::array();
  azinv_status first = AZINV_OK;
  try {
    auto arr = nlohmann::json::parse(specs);
    if (!arr.is_array()) throw azinv::Error(azinv::ErrorCode::kInvalidArgument, "batch must be a JSON array");
    std::vector<nlohmann::json> jobs(arr.begin(), arr.end());
    for (auto& r : azinv::reports::run_batch(jobs)) {
      azinv_status s = report_status(r);
      if (first == AZINV_OK) first = s;
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    first = set_error(AZINV_PARSE_ERROR, e.what());
  } catch (const azinv::Error& e) {
    first = set_error(static_cast<azinv_status>(e.code()), e.what());
  }
  if (reports) *reports = dup(out.dump());
  return first;
}

azinv_status azinv_reproduce_names(char** out) {
  if (!out) return set_error(AZINV_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(nlohmann::json(azinv::reports::reproduce_names()).dump()); });
}

}
