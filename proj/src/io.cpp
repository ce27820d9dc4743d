// Copyright 2026 The jjdeform Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "jjdeform/io.hpp"

#include <fstream>

#include "jjdeform/catalog.hpp"
#include "jjdeform/polynomial.hpp"

namespace jj {

namespace {

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error("expected a rational as a string or integer");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

std::size_t index_from_json(const Json& j, std::size_t dim) {
  long i = j.get<long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) throw Error("index out of range in JSON input");
  return static_cast<std::size_t>(i - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON input lacks \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error("matrix rows differ in length");
  return Matrix::from_rows(rows, cols);
}

Json to_json(const JJAlgebra& a) {
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (!is_zero(a.basis_product(i, j)))
        products.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", vector_to_json(a.basis_product(i, j))}});
  return {{"name", a.name()}, {"dim", a.dim()}, {"products", products}};
}

JJAlgebra algebra_from_json(const Json& j) {
  std::size_t dim = field(j, "dim").get<std::size_t>();
  JJAlgebra a(j.value("name", std::string("custom")), dim);
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      std::size_t i = index_from_json(field(p, "i"), dim);
      std::size_t k = index_from_json(field(p, "j"), dim);
      Vector c = vector_from_json(field(p, "coeffs"));
      if (c.size() != dim) throw Error("product coefficients have the wrong length");
      a.set_product(i, k, std::move(c));
    }
  }
  return a;
}

Json to_json(const SymCochain& c) {
  Json terms = Json::array();
  const auto& shape = c.shape();
  for (std::size_t idx = 0; idx < shape.multiset_count(); ++idx) {
    Vector v = c.value_at_index(idx);
    for (std::size_t k = 0; k < c.dim(); ++k) {
      if (sgn(v[k]) == 0) continue;
      Json args = Json::array();
      for (auto x : shape.multiset(idx)) args.push_back(x + 1);
      terms.push_back({{"args", args}, {"k", k + 1}, {"coeff", to_string(v[k])}});
    }
  }
  return {{"degree", c.degree()}, {"dim", c.dim()}, {"terms", terms}};
}

SymCochain cochain_from_json(const Json& j) {
  std::size_t degree = field(j, "degree").get<std::size_t>();
  std::size_t dim = field(j, "dim").get<std::size_t>();
  SymCochain c(dim, degree);
  for (const auto& t : field(j, "terms")) {
    std::vector<std::size_t> args;
    for (const auto& x : field(t, "args")) args.push_back(index_from_json(x, dim));
    if (args.size() != degree) throw Error("cochain term has the wrong arity");
    c.at(args, index_from_json(field(t, "k"), dim)) += scalar_from_json(field(t, "coeff"));
  }
  return c;
}

Json to_json(const FormalDeformation1& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(to_json(t));
  return {{"base", to_json(d.base)}, {"order", d.order()}, {"terms", terms}};
}

FormalDeformation1 deformation_from_json(const Json& j) {
  FormalDeformation1 d{algebra_from_json(field(j, "base")), {}};
  for (const auto& t : field(j, "terms")) d.terms.push_back(cochain_from_json(t));
  if (j.contains("order") && j.at("order").get<std::size_t>() != d.terms.size())
    throw Error("deformation order does not match its terms");
  return d;
}

Json to_json(const BilinearForm& f) {
  return {{"kind", to_string(f.kind)}, {"matrix", matrix_to_json(f.matrix)}};
}

BilinearForm form_from_json(const Json& j) {
  return {parse_form_kind(field(j, "kind").get<std::string>()), matrix_from_json(field(j, "matrix"))};
}

Json to_json(const LinearMap& p) { return {{"matrix", matrix_to_json(p.matrix)}}; }

LinearMap basis_change_from_json(const Json& j) {
  Matrix m = matrix_from_json(field(j, "matrix"));
  if (m.rows() != m.cols()) throw Error("basis change must be square");
  return LinearMap(std::move(m));
}

Json to_json(const MultiParamDeformation& d) {
  Json first = Json::array();
  for (const auto& c : d.first_order) first.push_back(to_json(c));
  Json relations = Json::array();
  for (const auto& r : d.relations) relations.push_back(to_string(r));
  Json corrections = Json::array();
  for (const auto& [s, phi] : d.corrections)
    corrections.push_back({{"monomial", {s.first + 1, s.second + 1}}, {"cochain", to_json(phi)}});
  Json table = Json::array();
  auto entries = versal_multiplication_table(d);
  for (const auto& e : entries) {
    Json value = Json::array();
    for (const auto& p : e.value) value.push_back(to_string(p));
    table.push_back({{"pair", {e.a + 1, e.b + 1}}, {"value", value}});
  }
  return {{"algebra", to_json(d.base)},
          {"n_params", d.n_params},
          {"truncation", to_string(d.truncation)},
          {"first_order", first},
          {"relations", relations},
          {"corrections", corrections},
          {"table", table},
          {"text", format_table(entries)}};
}

MultiParamDeformation versal_from_json(const Json& j) {
  MultiParamDeformation d;
  d.base = algebra_from_json(field(j, "algebra"));
  d.n_params = field(j, "n_params").get<std::size_t>();
  std::string trunc = field(j, "truncation").get<std::string>();
  if (trunc == to_string(Truncation::m2_zero))
    d.truncation = Truncation::m2_zero;
  else if (trunc == to_string(Truncation::m3_in_ideal))
    d.truncation = Truncation::m3_in_ideal;
  else
    throw Error("unknown truncation: " + trunc);
  for (const auto& c : field(j, "first_order")) d.first_order.push_back(cochain_from_json(c));
  if (d.first_order.size() != d.n_params) throw Error("n_params does not match first_order");
  for (const auto& r : field(j, "relations"))
    d.relations.push_back(parse_polynomial(r.get<std::string>(), d.n_params));
  for (const auto& c : field(j, "corrections")) {
    const Json& mono = field(c, "monomial");
    QuadMonomial s{index_from_json(mono.at(0), d.n_params), index_from_json(mono.at(1), d.n_params)};
    d.corrections.emplace(s, cochain_from_json(field(c, "cochain")));
  }
  return d;
}

Json graph_to_json(std::size_t dim, const std::vector<JumpEdge>& edges) {
  Json nodes = Json::array();
  for (const auto& n : catalog_names(dim)) nodes.push_back(n);
  Json out_edges = Json::array();
  for (const auto& e : edges) {
    Json je = {{"source", e.source}, {"target", e.target}, {"status", to_string(e.status)}};
    if (e.witness) {
      je["cocycle"] = e.cocycle;
      je["t0"] = to_string(e.t0);
      je["witness"] = matrix_to_json(e.witness->matrix);
    }
    if (!e.note.empty()) je["note"] = e.note;
    out_edges.push_back(std::move(je));
  }
  return {{"dim", dim}, {"nodes", nodes}, {"edges", out_edges}};
}

std::vector<JumpEdge> graph_from_json(const Json& j) {
  std::vector<JumpEdge> out;
  for (const auto& je : field(j, "edges")) {
    JumpEdge e;
    e.source = field(je, "source").get<std::string>();
    e.target = field(je, "target").get<std::string>();
    std::string status = field(je, "status").get<std::string>();
    if (status == "verified")
      e.status = WitnessStatus::verified;
    else if (status == "asserted")
      e.status = WitnessStatus::asserted;
    else
      throw Error("unknown witness status: " + status);
    if (je.contains("witness")) {
      e.cocycle = field(je, "cocycle").get<std::string>();
      e.t0 = scalar_from_json(field(je, "t0"));
      e.witness = LinearMap(matrix_from_json(je.at("witness")));
    }
    e.note = je.value("note", std::string());
    out.push_back(std::move(e));
  }
  return out;
}

std::string graph_to_dot(std::size_t dim, const std::vector<JumpEdge>& edges) {
  std::string out = "digraph jumps_dim" + std::to_string(dim) + " {\n  rankdir=TB;\n";
  for (const auto& n : catalog_names(dim)) out += "  \"" + n + "\";\n";
  for (const auto& e : edges) {
    out += "  \"" + e.source + "\" -> \"" + e.target + "\" [status=\"" + to_string(e.status) + "\"";
    if (e.status == WitnessStatus::asserted) out += ", style=dashed";
    if (e.witness) out += ", label=\"" + e.cocycle + ", t=" + to_string(e.t0) + "\"";
    out += "];\n";
  }
  return out + "}\n";
}

Json to_json(const std::vector<H2Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"name", r.name}, {"dim", r.dim}, {"dim_z2", r.dim_z2}, {"dim_b2", r.dim_b2},
                   {"dim_h2", r.dim_h2}});
  return out;
}

std::vector<H2Row> h2_table_from_json(const Json& j) {
  std::vector<H2Row> out;
  for (const auto& r : j)
    out.push_back({field(r, "name").get<std::string>(), field(r, "dim").get<std::size_t>(),
                   field(r, "dim_z2").get<std::size_t>(), field(r, "dim_b2").get<std::size_t>(),
                   field(r, "dim_h2").get<std::size_t>()});
  return out;
}

Json to_json(const std::vector<SurveyRow>& rows, FormKind kind) {
  Json out_rows = Json::array();
  for (const auto& r : rows) {
    Json jr = {{"name", r.name}, {"exists", r.exists}, {"space_dim", r.space_dim}};
    jr["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    jr["determinant"] = r.certificate;
    out_rows.push_back(std::move(jr));
  }
  return {{"kind", to_string(kind)}, {"rows", out_rows}};
}

std::vector<SurveyRow> survey_from_json(const Json& j) {
  std::vector<SurveyRow> out;
  for (const auto& jr : field(j, "rows")) {
    SurveyRow r;
    r.name = field(jr, "name").get<std::string>();
    r.exists = field(jr, "exists").get<bool>();
    r.space_dim = field(jr, "space_dim").get<std::size_t>();
    if (jr.contains("witness") && !jr.at("witness").is_null()) r.witness = form_from_json(jr.at("witness"));
    r.certificate = jr.value("determinant", std::string());
    out.push_back(std::move(r));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace jj
