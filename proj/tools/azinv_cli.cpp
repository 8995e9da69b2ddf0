#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "azinv/azinv.h"

using json = nlohmann::json;

namespace {

struct Options {
  std::string family = "trivial";
  std::string base = "Q";
  std::string gram, action, target, epsilon, element, algebra, d, alpha, beta;
  std::vector<std::string> roots, stages;
  long genus = -1;
  bool complete = true;
  std::uint64_t seed = 1;
  int count = 0;
  bool json_out = false;
};

json family_descriptor(Options o) {
  if (!o.family.empty() && o.family.front() == '{') return json::parse(o.family);
  // --algebra alone selects the finite family
  if (!o.algebra.empty() && o.family == "trivial") o.family = "finite";
  json f = {{"family", o.family}, {"base", o.base}};
  if (o.family == "quadratic") {
    if (!o.d.empty()) f["d"] = o.d;
    if (!o.alpha.empty()) f["alpha"] = o.alpha;
    if (!o.beta.empty()) f["beta"] = o.beta;
  }
  if (o.family == "hyperelliptic") {
    if (o.genus >= 0) f["genus"] = o.genus;
    if (!o.roots.empty()) f["roots"] = o.roots;
    f["complete"] = o.complete;
  }
  if (o.family == "tower") {
    // each stage "t" or "t:sign"
    json st = json::array();
    for (const auto& s : o.stages) {
      auto c = s.rfind(':');
      if (c == std::string::npos) st.push_back({{"t", s}, {"sign", -1}});
      else st.push_back({{"t", s.substr(0, c)}, {"sign", std::stoi(s.substr(c + 1))}});
    }
    f["stages"] = st;
  }
  if (o.family == "finite") f["algebra"] = json::parse(o.algebra.empty() ? "{\"kind\":\"field\"}" : o.algebra);
  return f;
}

json job_from(const std::string& command, const Options& o) {
  json j = {{"command", command}, {"family", family_descriptor(o)}};
  if (!o.gram.empty()) j["gram"] = o.gram;
  if (!o.action.empty()) j["action"] = o.action;
  if (!o.target.empty()) j["target"] = o.target;
  if (!o.epsilon.empty()) j["epsilon"] = o.epsilon;
  if (!o.element.empty()) j["element"] = o.element;
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_summary(const json& r) {
  if (r.contains("error")) {
    std::cout << "error: " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>() << "\n";
    return;
  }
  if (r.contains("checks")) {
    for (const auto& c : r["checks"]) {
      bool ok = c["pass"].get<bool>();
      std::cout << (ok ? "  ok   " : "  FAIL ") << c["name"].get<std::string>();
      if (!ok) std::cout << " (expected " << c["expected"].dump() << ", got " << c["got"].dump() << ")";
      std::cout << "\n";
    }
    std::cout << r["example"].get<std::string>() << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return;
  }
  for (const auto& [k, v] : r.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void save_report(const json& r, const std::string& name) {
  const char* dir = std::getenv("AZINV_REPORT_DIR");
  if (!dir || !*dir) return;
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (name + ".json")) << r.dump(2) << "\n";
}

int emit(const json& r, azinv_status s, const Options& o, const std::string& name) {
  save_report(r, name);
  if (o.json_out)
    std::cout << r.dump(2) << "\n";
  else if (r.is_array())
    for (const auto& x : r) print_summary(x);
  else
    print_summary(r);
  return s == AZINV_OK ? 0 : 1;
}

int run_spec(const json& spec, const Options& o, const std::string& name) {
  char* out = nullptr;
  azinv_status s = azinv_run_job(spec.dump().c_str(), &out);
  json r = json::parse(out);
  azinv_string_free(out);
  return emit(r, s, o, name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of involutions on split matrix algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--family", o.family, "trivial|quadratic|split|tower|laurent|hyperelliptic|finite, or a JSON descriptor");
    c->add_option("--base", o.base, "Q or F<p>");
    c->add_option("--d", o.d, "quadratic: adjoin sqrt(d)");
    c->add_option("--alpha", o.alpha, "quadratic: x^2 - alpha x + beta");
    c->add_option("--beta", o.beta);
    c->add_option("--stages", o.stages, "tower stages t[:sign]");
    c->add_option("--genus", o.genus, "hyperelliptic genus (roots default to 0..2g)");
    c->add_option("--roots", o.roots, "hyperelliptic roots");
    c->add_option("--complete", o.complete, "hyperelliptic: include the point at infinity (true|false)");
    c->add_option("--algebra", o.algebra, "finite: JSON constructor tree");
    c->add_flag("--json", o.json_out, "print the JSON report");
  };
  std::vector<std::pair<std::string, CLI::App*>> jobs;
  auto job = [&](const std::string& name, const std::string& help) {
    auto c = app.add_subcommand(name, help);
    common(c);
    jobs.emplace_back(name, c);
    return c;
  };
  auto ci = job("classify-involution", "validity, eps, coarse type, type vector and standardness");
  ci->add_option("--gram", o.gram, "Gram matrix [[..],[..]]");
  ci->add_option("--action", o.action, "n^2 x n^2 linear action, column i*n+j = tau(E_ij)");
  job("type-group", "coarse type group and its standard subgroup");
  auto dg = job("diagonalize", "v with v^(lambda tr) h v diagonal");
  dg->add_option("--gram", o.gram)->required();
  dg->add_option("--epsilon", o.epsilon, "default 1");
  job("symplectic-form", "v with v^tr h v = J + ... + J")->add_option("--gram", o.gram)->required();
  auto cg = job("congruence", "v over a square-root tower with v^(lambda tr) h v = target");
  cg->add_option("--gram", o.gram)->required();
  cg->add_option("--target", o.target)->required();
  cg->add_option("--epsilon", o.epsilon, "default 1");
  job("hilbert90", "a with a^-1 lambda(a) = r")->add_option("--element", o.element, "norm-one r")->required();
  job("structure", "local structure verdict for a finite algebra with involution");

  std::string example;
  auto rp = app.add_subcommand("reproduce", "run a named worked example or seeded suite");
  rp->add_option("example", example, "example name; 'list' prints the names")->required();
  rp->add_option("--seed", o.seed, "seed for randomized suites");
  rp->add_option("--count", o.count, "samples per randomized check");
  rp->add_flag("--json", o.json_out);

  std::string file;
  auto run = app.add_subcommand("run", "run a JobSpec JSON file ('-' for stdin); arrays run as a batch");
  run->add_option("file", file)->required();
  run->add_flag("--json", o.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [name, c] : jobs)
      if (c->parsed()) return run_spec(job_from(name, o), o, name);
    if (rp->parsed()) {
      if (example == "list") {
        char* out = nullptr;
        azinv_reproduce_names(&out);
        for (const auto& n : json::parse(out)) std::cout << n.get<std::string>() << "\n";
        azinv_string_free(out);
        return 0;
      }
      json spec = {{"command", "reproduce"}, {"example", example}, {"seed", o.seed}, {"count", o.count}};
      return run_spec(spec, o, "reproduce-" + example);
    }
    if (run->parsed()) {
      std::string text = read_input(file);
      json parsed = json::parse(text, nullptr, false);
      if (!parsed.is_discarded() && parsed.is_array()) {
        char* out = nullptr;
        azinv_status s = azinv_run_batch(text.c_str(), &out);
        json r = json::parse(out);
        azinv_string_free(out);
        return emit(r, s, o, "batch");
      }
      char* out = nullptr;
      azinv_status s = azinv_run_job(text.c_str(), &out);
      json r = json::parse(out);
      azinv_string_free(out);
      return emit(r, s, o, r.value("command", std::string("job")));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
