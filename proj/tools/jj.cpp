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


// Command-line front end. Exit codes: 0 success, 1 domain failure,
// 2 usage error.

#include <fmt/core.h>

#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jjdeform/bilinear.hpp"
#include "jjdeform/catalog.hpp"
#include "jjdeform/cohomology.hpp"
#include "jjdeform/deformation.hpp"
#include "jjdeform/io.hpp"
#include "jjdeform/jumps.hpp"
#include "jjdeform/versal.hpp"

namespace {

using namespace jj;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string name;
  std::string algebra_file;
  std::string witness;
  std::string target;
  std::string format = "text";
  std::string kind = "symplectic";
  std::string dims = "2,3,4,5";
  std::string cocycle;
  std::string d_map;
  std::string a0;
  std::string form_file;
  std::size_t dim = 0;
  bool table = false;
  bool survey = false;
  bool computed = false;
};

JJAlgebra load_algebra(const Options& o) {
  if (!o.algebra_file.empty()) {
    if (!o.name.empty()) throw UsageError("give either an algebra name or --algebra-file");
    return algebra_from_json(read_json_file(o.algebra_file));
  }
  if (o.name.empty()) throw UsageError("an algebra name or --algebra-file is required");
  return catalog(o.name);
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format " + f);
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(item, &pos);
      if (pos != item.size() || v < 2 || v > 5) throw UsageError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--dims expects a comma list drawn from 2,3,4,5");
    }
  }
  return out;
}

// "1,0;0,2" -> rows.
Matrix parse_matrix_text(const std::string& text) {
  std::vector<Vector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    Vector v;
    std::stringstream rs(row);
    std::string x;
    while (std::getline(rs, x, ',')) v.push_back(parse_scalar(x));
    rows.push_back(std::move(v));
  }
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw UsageError("matrix rows differ in length");
  return Matrix::from_rows(rows, cols);
}

std::string algebra_text(const JJAlgebra& a) {
  std::string out = fmt::format("{} (dim {})\n", a.name(), a.dim());
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vector& p = a.basis_product(i, j);
      if (is_zero(p)) continue;
      any = true;
      std::string rhs;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (sgn(p[k]) == 0) continue;
        Scalar mag = abs(p[k]);
        rhs += rhs.empty() ? (p[k] < 0 ? "-" : "") : (p[k] < 0 ? " - " : " + ");
        if (mag != 1) rhs += (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")");
        rhs += fmt::format("e{}", k + 1);
      }
      std::string lhs = i == j ? fmt::format("e{}^2", i + 1) : fmt::format("e{}e{}", i + 1, j + 1);
      out += fmt::format("  {} = {}\n", lhs, rhs);
    }
  if (!any) out += "  (zero multiplication)\n";
  return out;
}

std::vector<SymCochain> default_reps(const Cohomology& c, const std::string& name, bool computed) {
  if (!computed && !name.empty()) {
    std::vector<SymCochain> reps;
    for (const auto& s : reference_representatives(name)) reps.push_back(parse_cochain(s, c.algebra().dim()));
    if (!reps.empty() && verify_representatives(c, reps)) return reps;
  }
  return c.representatives();
}

int cmd_catalog(const Options& o) {
  require_format(o.format, {"text", "json"});
  if (o.name.empty()) {
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& n : catalog_names()) arr.push_back(to_json(catalog(n)));
      fmt::print("{}\n", arr.dump(2));
    } else {
      for (const auto& n : catalog_names())
        fmt::print("{:<14} dim {}{}\n", n, catalog(n).dim(), is_indecomposable(n) ? "  indecomposable" : "");
    }
    return kOk;
  }
  JJAlgebra a = catalog(o.name);
  if (o.format == "json")
    fmt::print("{}\n", to_json(a).dump(2));
  else
    fmt::print("{}", algebra_text(a));
  return kOk;
}

int cmd_verify(const Options& o) {
  JJAlgebra a = load_algebra(o);
  auto bad = verify_jj(a);
  bool leibniz = is_leibniz(a);
  fmt::print("JJ: {}; Leibniz: {}\n", bad.empty() ? "ok" : "FAIL", leibniz ? "ok" : "FAIL");
  for (const auto& t : bad) fmt::print("  Jacobi fails on (e{}, e{}, e{})\n", t[0] + 1, t[1] + 1, t[2] + 1);
  int rc = bad.empty() ? kOk : kDomainFailure;
  if (!o.witness.empty()) {
    if (o.target.empty()) throw UsageError("--witness needs --target");
    JJAlgebra b = catalog(o.target);
    LinearMap p = basis_change_from_json(read_json_file(o.witness));
    // The witness maps the target basis into the checked algebra.
    bool iso = p.dim() == a.dim() && a.dim() == b.dim() && is_isomorphism(p, b, a);
    fmt::print("isomorphism from {}: {}\n", b.name(), iso ? "ok" : "FAIL");
    if (!iso) rc = kDomainFailure;
  }
  return rc;
}

int cmd_cohomology(const Options& o) {
  require_format(o.format, {"text", "csv", "json"});
  if (o.table) {
    if (!o.name.empty() || !o.algebra_file.empty()) throw UsageError("--table takes no algebra");
    std::vector<std::string> names;
    for (auto d : parse_dims(o.dims))
      for (const auto& n : catalog_names(d)) names.push_back(n);
    auto rows = h2_table(names);
    if (o.format == "json") {
      fmt::print("{}\n", to_json(rows).dump(2));
    } else if (o.format == "csv") {
      fmt::print("name,dim,dim_z2,dim_b2,dim_h2\n");
      for (const auto& r : rows) fmt::print("{},{},{},{},{}\n", r.name, r.dim, r.dim_z2, r.dim_b2, r.dim_h2);
    } else {
      fmt::print("{:<14} {:>3} {:>6} {:>6} {:>6}\n", "algebra", "dim", "dim Z2", "dim B2", "dim H2");
      for (const auto& r : rows)
        fmt::print("{:<14} {:>3} {:>6} {:>6} {:>6}\n", r.name, r.dim, r.dim_z2, r.dim_b2, r.dim_h2);
    }
    return kOk;
  }
  JJAlgebra a = load_algebra(o);
  Cohomology c(a);
  auto s = c.summary();
  if (o.format == "json") {
    Json reps = Json::array();
    for (const auto& r : s.representatives) reps.push_back(to_json(r));
    Json j = {{"name", a.name()}, {"dim_z2", s.dim_z2}, {"dim_b2", s.dim_b2}, {"dim_h2", s.dim_h2},
              {"representatives", reps}};
    fmt::print("{}\n", j.dump(2));
  } else if (o.format == "csv") {
    fmt::print("name,dim_z2,dim_b2,dim_h2\n{},{},{},{}\n", a.name(), s.dim_z2, s.dim_b2, s.dim_h2);
  } else {
    fmt::print("{}: dim Z2 = {}, dim B2 = {}, dim H2 = {}\n", a.name(), s.dim_z2, s.dim_b2, s.dim_h2);
    for (std::size_t i = 0; i < s.representatives.size(); ++i)
      fmt::print("  phi{} = {}\n", i + 1, to_string(s.representatives[i]));
  }
  return kOk;
}

int cmd_classify(const Options& o) {
  require_format(o.format, {"text", "json"});
  JJAlgebra a = load_algebra(o);
  Cohomology c(a);
  std::vector<SymCochain> list;
  if (!o.cocycle.empty()) {
    list.push_back(parse_cochain(o.cocycle, a.dim()));
    if (!c.is_cocycle(list.back())) {
      fmt::print(stderr, "not a cocycle: {}\n", o.cocycle);
      return kDomainFailure;
    }
  } else {
    list = default_reps(c, o.name, o.computed);
  }
  Json out = Json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto cl = classify_infinitesimal(c, list[i]);
    if (o.format == "json") {
      Json j = {{"cocycle", to_string(list[i])}, {"kind", to_string(cl.kind)}};
      if (cl.order2_term) j["order2_term"] = to_string(*cl.order2_term);
      out.push_back(std::move(j));
    } else {
      fmt::print("{}: {}", to_string(list[i]), to_string(cl.kind));
      if (cl.order2_term && cl.kind != Extendibility::real)
        fmt::print(" (order 2 term {})", to_string(*cl.order2_term));
      fmt::print("\n");
    }
  }
  if (o.format == "json") fmt::print("{}\n", out.dump(2));
  return kOk;
}

int cmd_versal(const Options& o) {
  require_format(o.format, {"text", "json"});
  JJAlgebra a = load_algebra(o);
  Cohomology c(a);
  auto d = second_order_extension(c, default_reps(c, o.name, o.computed));
  if (o.format == "json") {
    fmt::print("{}\n", to_json(d).dump(2));
    return kOk;
  }
  fmt::print("{}: {} parameters\n", a.name(), d.n_params);
  for (std::size_t i = 0; i < d.n_params; ++i) fmt::print("  phi{} = {}\n", i + 1, to_string(d.first_order[i]));
  fmt::print("relations:{}\n", d.relations.empty() ? " none" : "");
  for (const auto& r : d.relations) fmt::print("  {} = 0\n", to_string(r));
  fmt::print("corrections:{}\n", d.corrections.empty() ? " none" : "");
  for (const auto& [s, phi] : d.corrections)
    fmt::print("  phi_{}{} = {}\n", s.first + 1, s.second + 1, to_string(phi));
  fmt::print("versal multiplication:\n");
  for (const auto& line : format_table(versal_multiplication_table(d))) fmt::print("  {}\n", line);
  return kOk;
}

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out += fmt::format("{}{:>5}", c ? " " : "", to_string(m(r, c)));
    out += "]\n";
  }
  return out;
}

int cmd_forms(const Options& o) {
  require_format(o.format, {"text", "csv", "json"});
  FormKind kind = parse_form_kind(o.kind);
  if (o.survey) {
    std::vector<std::string> names;
    if (!o.name.empty()) {
      names.push_back(o.name);
    } else {
      names = catalog_names();
    }
    auto rows = structure_survey(names, kind);
    if (o.format == "json") {
      fmt::print("{}\n", to_json(rows, kind).dump(2));
    } else if (o.format == "csv") {
      fmt::print("name,indecomposable,exists,space_dim\n");
      for (const auto& r : rows)
        fmt::print("{},{},{},{}\n", r.name, is_indecomposable(r.name) ? 1 : 0, r.exists ? 1 : 0, r.space_dim);
    } else {
      fmt::print("{} forms\n{:<14} {:>5} {:>6}  {}\n", to_string(kind), "algebra", "space", "exists", "");
      for (const auto& r : rows)
        fmt::print("{:<14} {:>5} {:>6}  {}\n", r.name, r.space_dim, r.exists ? "yes" : "no",
                   r.exists ? "" : "generic determinant is 0");
    }
    return kOk;
  }
  JJAlgebra a = load_algebra(o);
  if (!o.form_file.empty()) {
    BilinearForm f = form_from_json(read_json_file(o.form_file));
    bool ok = verify_form(a, f);
    fmt::print("{} form on {}: {}\n", to_string(f.kind), a.name(), ok ? "ok" : "FAIL");
    return ok ? kOk : kDomainFailure;
  }
  Subspace space = compatible_form_space(a, kind);
  auto s = find_nondegenerate(space, kind);
  if (o.format == "json") {
    SurveyRow row{a.name(), s.form.has_value(), space.dim(), s.form, to_string(s.determinant, "x")};
    fmt::print("{}\n", to_json(std::vector<SurveyRow>{row}, kind).dump(2));
  } else {
    fmt::print("{}: compatible {} forms span {} dimensions\n", a.name(), to_string(kind), space.dim());
    if (s.form)
      fmt::print("nondegenerate example:\n{}", matrix_text(s.form->matrix));
    else
      fmt::print("no nondegenerate form: generic determinant is 0\n");
  }
  return s.form ? kOk : kDomainFailure;
}

int cmd_doubleext(const Options& o) {
  require_format(o.format, {"text", "json"});
  JJAlgebra a = o.name.empty() && o.algebra_file.empty() ? catalog("F2") : load_algebra(o);
  const std::size_t m = a.dim();
  BilinearForm omega{FormKind::symplectic, Matrix(m, m)};
  if (!o.form_file.empty()) {
    omega = form_from_json(read_json_file(o.form_file));
  } else if (m == 2 && a.is_trivial()) {
    omega.matrix(0, 1) = 1;
    omega.matrix(1, 0) = -1;
  } else if (m != 0) {
    throw UsageError("--form-file is required for this algebra");
  }
  SpecialAdmissiblePair pair{LinearMap::zero(m), zero_vector(m)};
  if (!o.d_map.empty()) pair.d_map = LinearMap(parse_matrix_text(o.d_map));
  if (!o.a0.empty()) {
    Matrix v = parse_matrix_text(o.a0);
    pair.a0 = v.rows() == 1 ? v.row(0) : v.column(0);
  }
  if (pair.d_map.matrix.rows() != m || pair.d_map.matrix.cols() != m || pair.a0.size() != m)
    throw UsageError("--d and --a0 must match the algebra dimension");
  if (!verify_form(a, omega)) {
    fmt::print(stderr, "the form is not symplectic on {}\n", a.name());
    return kDomainFailure;
  }
  if (!is_special_admissible(a, omega, pair)) {
    fmt::print(stderr, "(D, A0) is not a special admissible pair\n");
    return kDomainFailure;
  }
  auto [ext, form] = double_extension(a, omega, pair);
  bool jj_ok = verify_jj(ext).empty();
  bool form_ok = verify_form(ext, form);
  int rc = jj_ok && form_ok ? kOk : kDomainFailure;
  std::optional<bool> iso;
  if (!o.witness.empty()) {
    if (o.target.empty()) throw UsageError("--witness needs --target");
    LinearMap p = basis_change_from_json(read_json_file(o.witness));
    JJAlgebra b = catalog(o.target);
    iso = p.dim() == ext.dim() && b.dim() == ext.dim() && is_isomorphism(p, b, ext);
    if (!*iso) rc = kDomainFailure;
  }
  if (o.format == "json") {
    Json j = {{"algebra", to_json(ext)}, {"form", to_json(form)}, {"jj", jj_ok}, {"symplectic", form_ok}};
    if (iso) j["isomorphic_to_target"] = *iso;
    fmt::print("{}\n", j.dump(2));
  } else {
    fmt::print("{}basis: e, e1..e{}, e*\nform:\n{}JJ: {}; symplectic: {}\n", algebra_text(ext), m,
               matrix_text(form.matrix), jj_ok ? "ok" : "FAIL", form_ok ? "ok" : "FAIL");
    if (iso) fmt::print("isomorphism from {}: {}\n", o.target, *iso ? "ok" : "FAIL");
  }
  return rc;
}

int cmd_graph(const Options& o) {
  require_format(o.format, {"dot", "json", "text"});
  auto edges = jump_graph(o.dim);
  if (o.format == "json") {
    fmt::print("{}\n", graph_to_json(o.dim, edges).dump(2));
  } else if (o.format == "dot") {
    fmt::print("{}", graph_to_dot(o.dim, edges));
  } else {
    for (const auto& e : edges) fmt::print("{} -> {} [{}]\n", e.source, e.target, to_string(e.status));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-Jordan algebras: cohomology, deformations and forms"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* sub, bool required_positional = false) {
    auto* opt = sub->add_option("algebra", o.name, "catalog name, e.g. J_1_2+F or \"J_{1,2}+F\"");
    if (required_positional) opt->required();
    sub->add_option("--algebra-file", o.algebra_file, "algebra as JSON");
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "list the catalog or print one algebra");
  catalog_cmd->add_option("algebra", o.name);
  catalog_cmd->add_option("--format", o.format, "text|json");

  auto* verify = app.add_subcommand("verify", "check the Jacobi identity and the Leibniz property");
  add_algebra(verify);
  verify->add_option("--witness", o.witness, "basis change JSON mapping --target into the algebra");
  verify->add_option("--target", o.target, "catalog name for --witness");

  auto* coh = app.add_subcommand("cohomology", "second cohomology of one algebra or the catalog table");
  add_algebra(coh);
  coh->add_flag("--table", o.table, "table over the catalog");
  coh->add_option("--dims", o.dims, "dimensions for --table, e.g. 2,3,4,5");
  coh->add_option("--format", o.format, "text|csv|json");

  auto* classify = app.add_subcommand("classify", "extendibility of infinitesimal deformations");
  add_algebra(classify);
  classify->add_option("--cocycle", o.cocycle, "one cocycle, e.g. e^{3,3}_2");
  classify->add_flag("--computed-reps", o.computed, "use computed instead of published representatives");
  classify->add_option("--format", o.format, "text|json");

  auto* versal = app.add_subcommand("versal", "second-order versal deformation");
  add_algebra(versal);
  versal->add_flag("--computed-reps", o.computed, "use computed instead of published representatives");
  versal->add_option("--format", o.format, "text|json");

  auto* forms = app.add_subcommand("forms", "symplectic and pseudo-euclidean forms");
  add_algebra(forms);
  forms->add_option("--kind", o.kind, "symplectic|pseudo")
      ->check(CLI::IsMember({"symplectic", "pseudo", "pseudo_euclidean"}));
  forms->add_flag("--survey", o.survey, "survey the catalog (or the named algebra)");
  forms->add_option("--form-file", o.form_file, "check a form given as JSON");
  forms->add_option("--format", o.format, "text|csv|json");

  auto* dext = app.add_subcommand("doubleext", "symplectic double extension (default base F2)");
  add_algebra(dext);
  dext->add_option("--form-file", o.form_file, "symplectic form JSON on the base");
  dext->add_option("--d", o.d_map, "anti-derivation rows, e.g. \"1,-1;1,-1\"");
  dext->add_option("--a0", o.a0, "A0 coordinates, e.g. \"1,0\"");
  dext->add_option("--witness", o.witness, "basis change JSON mapping --target into the extension");
  dext->add_option("--target", o.target, "catalog name for --witness");
  dext->add_option("--format", o.format, "text|json");

  auto* graph = app.add_subcommand("graph", "jump-deformation diagram");
  graph->add_option("--dim", o.dim, "3, 4 or 5")->required()->check(CLI::IsMember({3, 4, 5}));
  graph->add_option("--format", o.format, "dot|json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(o);
    if (*verify) return cmd_verify(o);
    if (*coh) return cmd_cohomology(o);
    if (*classify) return cmd_classify(o);
    if (*versal) return cmd_versal(o);
    if (*forms) return cmd_forms(o);
    if (*dext) return cmd_doubleext(o);
    if (*graph) return cmd_graph(o);
  } catch (const UsageError& e) {
    fmt::print(stderr, "usage error: {}\n{}", e.what(), app.help());
    return kUsage;
  } catch (const jj::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kDomainFailure;
  }
  return kUsage;
}
