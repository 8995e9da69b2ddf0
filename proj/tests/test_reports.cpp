#include "doctest.h"
#include "support.hpp"

#include "exact/tower.hpp"
#include "reports/jobs.hpp"
#include "reports/sampling.hpp"

using namespace azt;
using azinv::reports::json;

namespace {

json family(const std::string& name, json extra = json::object()) {
  extra["family"] = name;
  if (!extra.contains("base")) extra["base"] = "Q";
  return extra;
}

}  // namespace

TEST_CASE("diagonalize report re-verifies from its own text") {
  json spec = {{"command", "diagonalize"},
               {"family", family("quadratic", {{"d", -1}})},
               {"gram", json::parse(R"([["0", "1 + r1"], ["1 - r1", "3"]])")}};
  json r = reports::run_job(spec);
  REQUIRE(r.at("verified") == true);
  auto f = reports::family_from_json(spec.at("family"));
  Matrix h = reports::matrix_from_json(f->ring(), spec.at("gram"));
  Matrix v = reports::matrix_from_json(f->ring(), json::parse(r.dump()).at("v"));
  Matrix d = v.lambda_tr() * h * v;
  std::size_t i = 0;
  for (const auto& e : r.at("diagonal")) {
    CHECK(d(i, i) == reports::element_from_json(f->ring(), e));
    ++i;
  }
  CHECK(d(0, 1).is_zero());
  CHECK(d(1, 0).is_zero());
}

TEST_CASE("congruence report rebuilds its extension") {
  std::mt19937_64 g(11);
  auto k = Tower::field(BaseField::rationals());
  for (int trial = 0; trial < 10; ++trial) {
    Matrix h = sampling::hermitian(g, k, 3, k->one());
    Matrix p = sampling::invertible(g, k, 3, 2);
    Matrix target = p.transpose() * h * p;
    json spec = {{"command", "congruence"},
                 {"family", family("trivial")},
                 {"gram", reports::matrix_to_json(h)},
                 {"target", reports::matrix_to_json(target)}};
    json r = json::parse(reports::run_job(spec).dump());
    REQUIRE(r.at("verified") == true);
    TowerPtr ext = k;
    for (const auto& t : r.at("tower")) ext = ext->extend(el(ext, t.get<std::string>()), 1);
    CHECK(ext->signature() == r.at("ring").get<std::string>());
    CHECK(r.at("tower").size() <= 3);
    Matrix v = reports::matrix_from_json(ext, r.at("v"));
    Matrix hl = reports::matrix_from_json(ext, spec.at("gram"));
    Matrix tl = reports::matrix_from_json(ext, spec.at("target"));
    CHECK(v.transpose() * hl * v == tl);
  }
}

TEST_CASE("algebra descriptors survive a round trip") {
  std::mt19937_64 g(5);
  BaseField k = BaseField::rationals();
  for (int i = 0; i < 40; ++i) {
    auto a = sampling::algebra(g, k, 6);
    json j = reports::algebra_to_json(*a);
    auto b = reports::algebra_from_json(k, json::parse(j.dump()));
    REQUIRE(b->dimension() == a->dimension());
    CHECK(reports::algebra_to_json(*b) == j);
    for (std::size_t x = 0; x < a->dimension(); ++x) {
      CHECK(b->coordinates(b->basis(x).lambda()) == a->coordinates(a->basis(x).lambda()));
      for (std::size_t y = 0; y < a->dimension(); ++y)
        CHECK(b->coordinates(b->basis(x) * b->basis(y)) == a->coordinates(a->basis(x) * a->basis(y)));
    }
  }
}

TEST_CASE("structure report presentation holds in the reparsed algebra") {
  json spec = {{"command", "structure"},
               {"family", {{"family", "finite"}, {"base", "Q"}, {"algebra", {{"kind", "swap"}, {"of", {{"kind", "field"}}}}}}}};
  json r = reports::run_job(spec);
  REQUIRE(r.at("verified") == true);
  CHECK(r.at("verdict") == "QuadraticEtaleOverFixed");
  auto a = reports::algebra_from_json(BaseField::rationals(), r.at("algebra"));
  Elem x = reports::element_from_json(a, r.at("presentation").at("r"));
  Elem t = reports::element_from_json(a, r.at("presentation").at("trace"));
  Elem n = reports::element_from_json(a, r.at("presentation").at("norm"));
  CHECK((x * x - t * x + n).is_zero());
  CHECK(a->try_inverse(x - x.lambda(), nullptr).has_value());
}

TEST_CASE("errors are reported, not thrown") {
  json bad_gram = {{"command", "classify-involution"}, {"family", family("trivial")}, {"gram", json::parse(R"([["1", "1"], ["-1", "1"]])")}};
  json r = reports::run_job(bad_gram);
  CHECK(r.at("verified") == false);
  CHECK(r.at("error").at("code") == "InvalidGram");
  CHECK(!r.at("error").at("message").get<std::string>().empty());

  CHECK(reports::run_job({{"command", "type-group"}, {"family", family("trivial", {{"base", "F2"}})}}).at("error").at("code") ==
        "CharacteristicTwoObstruction");
  CHECK(reports::run_job({{"command", "type-group"}, {"family", family("moebius")}}).at("error").at("code") == "InvalidArgument");
  CHECK(reports::run_job({{"command", "hilbert90"}, {"family", family("quadratic", {{"d", 2}})}, {"element", "2"}})
            .at("error")
            .at("code") == "NotNormOne");
  CHECK(reports::run_job(json::array()).at("error").at("code") == "InvalidArgument");
  CHECK(reports::run_job({{"command", "symplectic-form"}, {"family", family("trivial")}, {"gram", json::parse(R"([["0", "1", "0"], ["-1", "0", "1"], ["0", "-1", "0"]])")}})
            .at("error")
            .at("code") == "OddDimensionAlternating");
}

TEST_CASE("batches keep input order") {
  std::vector<json> specs;
  for (long d : {-1, 2, 5, -7, 3, -5, 6, 7})
    specs.push_back({{"command", "type-group"}, {"family", family("quadratic", {{"d", d}})}});
  specs.push_back({{"command", "nope"}});
  auto out = reports::run_batch(specs);
  REQUIRE(out.size() == specs.size());
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    CHECK(out[i].at("verified") == true);
    CHECK(out[i].at("family") == "quadratic");
    CHECK(out[i].at("description").get<std::string>().find(std::to_string(specs[i]["family"]["d"].get<long>())) != std::string::npos);
  }
  CHECK(out.back().at("verified") == false);
}
