#include "reports/jobs.hpp"

#include <future>

#include "exact/errors.hpp"
#include "exact/linalg.hpp"
#include "exact/parser.hpp"
#include "hermitian/hermitian.hpp"
#include "involutions/involution.hpp"
#include "involutive/rings.hpp"
#include "reports/reproduce.hpp"
#include "types/type_group.hpp"

namespace azinv::reports {

namespace {

std::string text_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::kParse, "expected an expression string, got " + j.dump());
}

Scalar scalar_from_json(const BaseField& k, const json& j) {
  auto f = Tower::field(k);
  auto s = f->as_scalar(parse_element(f, text_of(j)));
  return *s;
}

const json& need(const json& spec, const char* key) {
  if (!spec.contains(key)) fail(ErrorCode::kInvalidArgument, std::string("missing field \"") + key + "\"");
  return spec.at(key);
}

json elems_to_json(const std::vector<Elem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

json coeffs_to_json(const std::vector<Coeffs>& v) {
  json a = json::array();
  for (const auto& c : v) {
    json row = json::array();
    for (const auto& s : c) row.push_back(s.to_string());
    a.push_back(row);
  }
  return a;
}

Elem epsilon_of(const FamilyPtr& f, const json& spec, long fallback) {
  return spec.contains("epsilon") ? element_from_json(f->ring(), spec.at("epsilon")) : f->ring()->from_int(fallback);
}

json class_json(const CoarseTypeClass& c) {
  json j = {{"class", c.key()}, {"family", c.family->name()}, {"standard", is_standard_type(c)}};
  if (c.representative) j["representative"] = c.representative->to_string();
  if (!c.signs.empty()) j["signs"] = c.signs;
  if (c.hilbert90) j["hilbert90"] = {{"a", c.hilbert90->a.to_string()}, {"x", c.hilbert90->x.to_string()}, {"t", c.hilbert90->t.to_string()}};
  return j;
}

json classify_involution(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  MatrixInvolution tau = spec.contains("action") ? MatrixInvolution::from_action(matrix_from_json(f->ring(), spec.at("action")))
                                                 : MatrixInvolution::from_gram(matrix_from_json(f->ring(), need(spec, "gram")));
  auto ct = coarse_type(tau, f);
  json r = class_json(ct);
  r["degree"] = tau.degree();
  r["gram"] = matrix_to_json(tau.gram());
  r["epsilon"] = tau.epsilon().to_string();
  r["valid"] = true;
  r["input"] = spec.contains("action") ? "action" : "gram";
  bool verified = true;
  if (f->ring()->is_field() && f->ring()->involution_is_trivial()) {
    auto fk = classify_first_kind(tau);
    r["kind"] = first_kind_name(fk.kind);
    r["symmetric_dimension"] = fk.symmetric_dimension;
    r["type"] = fk.kind == FirstKind::kOrthogonal ? 1 : -1;
  } else if (!f->ring()->involution_is_trivial() && f->kind() != FamilyKind::kLaurent && f->kind() != FamilyKind::kHyperelliptic) {
    r["kind"] = "Unitary";
  }
  if (f->kind() == FamilyKind::kLaurent || f->kind() == FamilyKind::kHyperelliptic) {
    auto tv = type_vector(tau, f);
    json pts = json::array();
    for (const auto& [label, sign] : tv.entries) pts.push_back({{"point", label}, {"sign", sign}});
    r["type_vector"] = pts;
    if (tv.infinity_not_evaluated) r["infinity"] = "not evaluated";
  }
  // h^{lambda tr} = eps h re-checked on the serialized Gram matrix
  Matrix h = matrix_from_json(f->ring(), r["gram"]);
  verified = verified && h.lambda_tr() == h.scaled(element_from_json(f->ring(), r["epsilon"]));
  r["verified"] = verified;
  return r;
}

json type_group(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  auto t = coarse_type_group(f);
  auto s = standard_subgroup(f);
  json pts = json::array();
  for (const auto& z : t.ramification) pts.push_back(z.label);
  json r = {{"family", t.family},
            {"structure", t.structure},
            {"rank", t.rank},
            {"order", t.order},
            {"representatives", t.representatives},
            {"representatives_truncated", t.representatives_truncated},
            {"ramification", pts},
            {"standard_representatives", s.standard_representatives},
            {"standard_order", s.standard_order},
            {"facts", t.facts},
            {"description", f->describe()}};
  if (t.rank < 63) r["types"] = 1ULL << t.rank;
  r["standard"] = std::stoull(s.standard_order);
  r["verified"] = t.representatives_truncated || t.representatives.size() == (1ULL << t.rank);
  return r;
}

json diagonalize_job(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  Matrix h = matrix_from_json(f->ring(), need(spec, "gram"));
  Elem eps = epsilon_of(f, spec, 1);
  auto d = diagonalize(HermitianMatrix(h, eps));
  json r = {{"v", matrix_to_json(d.v)}, {"diagonal", elems_to_json(d.diagonal)}, {"epsilon", eps.to_string()}};
  Matrix v = matrix_from_json(f->ring(), r["v"]);
  std::vector<Elem> diag;
  for (const auto& e : r["diagonal"]) diag.push_back(element_from_json(f->ring(), e));
  r["verified"] = v.lambda_tr() * h * v == Matrix::diagonal(f->ring(), diag);
  return r;
}

json symplectic_job(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  Matrix h = matrix_from_json(f->ring(), need(spec, "gram"));
  Matrix v = symplectic_normal_form(HermitianMatrix(h, f->ring()->from_int(-1)));
  Matrix j = standard_alternating(f->ring(), h.rows());
  json r = {{"v", matrix_to_json(v)}, {"normal_form", matrix_to_json(j)}};
  Matrix vv = matrix_from_json(f->ring(), r["v"]);
  r["verified"] = vv.transpose() * h * vv == j;
  return r;
}

json congruence_job(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  Matrix h1 = matrix_from_json(f->ring(), need(spec, "gram"));
  Matrix h2 = matrix_from_json(f->ring(), need(spec, "target"));
  Elem eps = epsilon_of(f, spec, 1);
  auto w = congruence_witness(HermitianMatrix(h1, eps), HermitianMatrix(h2, eps));
  json r = {{"tower", w.tower},          {"v", matrix_to_json(w.v)}, {"ring", w.ring->signature()},
            {"sigma", w.sigma},          {"beta", w.beta.to_string()}, {"method", w.method},
            {"epsilon", eps.to_string()}};
  // rebuild the extension from the serialized stage list and re-check v^{lambda tr} h v = h'
  auto base = std::dynamic_pointer_cast<const Tower>(f->ring());
  TowerPtr ext = base;
  for (const auto& t : r["tower"]) ext = ext->extend(parse_element(ext, t.get<std::string>()), 1);
  Matrix v = matrix_from_json(ext, r["v"]);
  auto lift = [&](const Matrix& m) {
    Matrix out(ext, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ext->lift(m(i, j));
    return out;
  };
  r["verified"] = v.lambda_tr() * (lift(h1) * v) == lift(h2);
  return r;
}

json hilbert90_job(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  Elem rr = element_from_json(f->ring(), need(spec, "element"));
  auto w = hilbert90_witness(NormOneElement(rr));
  json r = {{"r", rr.to_string()}, {"a", w.a.to_string()}, {"x", w.x.to_string()}, {"t", w.t.to_string()}};
  Elem a = element_from_json(f->ring(), r["a"]);
  r["verified"] = a.inverse() * a.lambda() == rr;
  return r;
}

json structure_job(const json& spec) {
  auto f = family_from_json(need(spec, "family"));
  auto alg = f->algebra();
  if (!alg) fail(ErrorCode::kUnsupported, "structure needs a finite-dimensional algebra");
  auto s = classify_fixed_local(alg);
  json r = {{"verdict", verdict_name(s.verdict)},
            {"maximal_ideals", s.ideals.size()},
            {"ideals", json::array()},
            {"lambda_image", s.lambda_image},
            {"lambda_stable", s.lambda_stable},
            {"residue_involution_trivial", s.residue_involution_trivial},
            {"fixed_basis", elems_to_json(s.fixed_basis)},
            {"radical", coeffs_to_json(s.radical)},
            {"algebra", algebra_to_json(*alg)},
            {"dimension", alg->dimension()}};
  for (const auto& id : s.ideals) r["ideals"].push_back(coeffs_to_json(id));
  bool ok = s.lambda_stable && s.ideals.size() <= 2;
  if (s.presentation.etale) {
    const auto& p = s.presentation;
    r["presentation"] = {{"r", p.r.to_string()}, {"trace", p.trace.to_string()}, {"norm", p.norm.to_string()},
                         {"polynomial", p.polynomial()}};
    Elem x = element_from_json(alg, p.r.to_string());
    Elem t = element_from_json(alg, p.trace.to_string());
    Elem n = element_from_json(alg, p.norm.to_string());
    ok = ok && (x * x - t * x + n).is_zero() && alg->try_inverse(x - x.lambda(), nullptr).has_value();
  }
  r["verified"] = ok;
  return r;
}

json dispatch(const json& spec) {
  std::string cmd = need(spec, "command").get<std::string>();
  if (cmd == "classify-involution") return classify_involution(spec);
  if (cmd == "type-group") return type_group(spec);
  if (cmd == "diagonalize") return diagonalize_job(spec);
  if (cmd == "symplectic-form") return symplectic_job(spec);
  if (cmd == "congruence") return congruence_job(spec);
  if (cmd == "hilbert90") return hilbert90_job(spec);
  if (cmd == "structure") return structure_job(spec);
  if (cmd == "reproduce")
    return reproduce(need(spec, "example").get<std::string>(), spec.value("seed", std::uint64_t{1}), spec.value("count", 0));
  fail(ErrorCode::kInvalidArgument, "unknown command \"" + cmd + "\"");
}

}  // namespace

FamilyPtr family_from_json(const json& j) {
  if (j.is_string()) return family_from_json(json{{"family", j}});
  BaseField k = BaseField::parse(j.value("base", std::string("Q")));
  std::string name = need(j, "family").get<std::string>();
  if (name == "trivial") return Family::trivial(k);
  if (name == "laurent") return Family::laurent(k);
  if (name == "split") return Family::quadratic(k, Scalar(k, 1), Scalar(k, 0));
  if (name == "quadratic") {
    if (j.contains("d")) return Family::quadratic_sqrt(k, scalar_from_json(k, j.at("d")));
    return Family::quadratic(k, scalar_from_json(k, need(j, "alpha")), scalar_from_json(k, need(j, "beta")));
  }
  if (name == "tower") {
    TowerPtr t = Tower::field(k);
    for (const auto& st : need(j, "stages"))
      t = t->extend(parse_element(t, text_of(need(st, "t"))), st.value("sign", -1));
    return Family::tower(t);
  }
  if (name == "hyperelliptic") {
    std::vector<Scalar> roots;
    if (j.contains("roots")) {
      for (const auto& r : j.at("roots")) roots.push_back(scalar_from_json(k, r));
    } else {
      long g = need(j, "genus").get<long>();
      if (g < 0) fail(ErrorCode::kInvalidArgument, "genus must be nonnegative");
      for (long i = 0; i <= 2 * g; ++i) roots.emplace_back(k, i);
    }
    if (j.contains("genus") && roots.size() != 2 * j.at("genus").get<std::size_t>() + 1)
      fail(ErrorCode::kInvalidArgument, "genus g needs 2g+1 roots");
    return Family::hyperelliptic(k, roots, j.value("complete", true));
  }
  if (name == "finite") return Family::finite(algebra_from_json(k, need(j, "algebra")));
  fail(ErrorCode::kInvalidArgument, "unknown family \"" + name + "\"");
}

AlgebraPtr algebra_from_json(const BaseField& k, const json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "field") return FiniteAlgebra::field(k);
  if (kind == "product") return FiniteAlgebra::product(algebra_from_json(k, need(j, "left")), algebra_from_json(k, need(j, "right")));
  if (kind == "swap") return FiniteAlgebra::swap(algebra_from_json(k, need(j, "of")));
  if (kind == "sqrt") {
    auto a = algebra_from_json(k, need(j, "of"));
    return FiniteAlgebra::adjoin_sqrt(a, parse_element(a, text_of(need(j, "s"))), j.value("sign", -1));
  }
  if (kind == "thicken") return FiniteAlgebra::thicken(algebra_from_json(k, need(j, "of")), j.value("sign", -1));
  if (kind == "table") {
    auto rows = need(j, "table");
    std::size_t d = rows.size();
    auto coords = [&](const json& v) {
      Coeffs c;
      for (const auto& x : v) c.push_back(scalar_from_json(k, x));
      if (c.size() != d) fail(ErrorCode::kInvalidArgument, "table coordinates must have length " + std::to_string(d));
      return c;
    };
    std::vector<std::vector<Coeffs>> table(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rows[i].size() != d) fail(ErrorCode::kInvalidArgument, "table must be d x d");
      for (const auto& c : rows[i]) table[i].push_back(coords(c));
    }
    ScalarMatrix inv(k, d, d);
    const auto& cols = need(j, "involution");
    if (cols.size() != d) fail(ErrorCode::kInvalidArgument, "involution needs d columns");
    for (std::size_t c = 0; c < d; ++c) {
      Coeffs col = coords(cols[c]);
      for (std::size_t r = 0; r < d; ++r) inv(r, c) = col[r];
    }
    return FiniteAlgebra::from_table(k, table, coords(need(j, "unity")), inv);
  }
  fail(ErrorCode::kInvalidArgument, "unknown algebra kind \"" + kind + "\"");
}

json algebra_to_json(const FiniteAlgebra& a) {
  switch (a.kind()) {
    case FiniteAlgebra::Kind::kField: return {{"kind", "field"}};
    case FiniteAlgebra::Kind::kProduct: return {{"kind", "product"}, {"left", algebra_to_json(*a.left())}, {"right", algebra_to_json(*a.right())}};
    case FiniteAlgebra::Kind::kSwap: return {{"kind", "swap"}, {"of", algebra_to_json(*a.left())}};
    case FiniteAlgebra::Kind::kSqrt:
      return {{"kind", "sqrt"}, {"of", algebra_to_json(*a.left())}, {"s", a.left()->from_coordinates(a.sqrt_value()).to_string()}, {"sign", a.sign()}};
    case FiniteAlgebra::Kind::kThicken: return {{"kind", "thicken"}, {"of", algebra_to_json(*a.left())}, {"sign", a.sign()}};
    case FiniteAlgebra::Kind::kTable: {
      json t = json::array(), inv = json::array(), unity = json::array();
      std::size_t d = a.dimension();
      for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < d; ++jj) {
          json c = json::array();
          for (const auto& s : a.table()[i][jj]) c.push_back(s.to_string());
          row.push_back(c);
        }
        t.push_back(row);
        json col = json::array();
        for (std::size_t r = 0; r < d; ++r) col.push_back(a.involution_matrix()(r, i).to_string());
        inv.push_back(col);
        unity.push_back(a.unity()[i].to_string());
      }
      return {{"kind", "table"}, {"table", t}, {"unity", unity}, {"involution", inv}};
    }
  }
  return {};
}

Elem element_from_json(const RingPtr& ring, const json& j) { return parse_element(ring, text_of(j)); }

Matrix matrix_from_json(const RingPtr& ring, const json& j) {
  if (j.is_string()) return Matrix::parse(ring, j.get<std::string>());
  if (!j.is_array()) fail(ErrorCode::kParse, "matrix must be a string or an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::kParse, "matrix row must be an array");
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(text_of(e));
    rows.push_back(r);
  }
  return Matrix::from_strings(ring, rows);
}

json matrix_to_json(const Matrix& m) { return m.to_strings(); }

json error_report(const json& spec, const std::string& code, const std::string& message) {
  json r = {{"error", {{"code", code}, {"message", message}}}, {"verified", false}};
  if (spec.is_object() && spec.contains("command")) r["command"] = spec.at("command");
  return r;
}

json run_job(const json& spec) {
  try {
    if (!spec.is_object()) fail(ErrorCode::kInvalidArgument, "job must be a JSON object");
    json r = dispatch(spec);
    r["command"] = spec.at("command");
    return r;
  } catch (const Error& e) {
    return error_report(spec, std::string(error_code_name(e.code())), e.what());
  } catch (const json::exception& e) {
    return error_report(spec, "ParseError", e.what());
  }
}

std::vector<json> run_batch(const std::vector<json>& specs) {
  std::vector<std::future<json>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, [&s] { return run_job(s); }));
  std::vector<json> out;
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

}  // namespace azinv::reports
