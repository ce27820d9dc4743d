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


// Acceptance run: one PASS/FAIL line per criterion, indented detail lines
// for each sub-check. Exit status is nonzero when any criterion fails.

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jjdeform/bilinear.hpp"
#include "jjdeform/catalog.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/cohomology.hpp"
#include "jjdeform/deformation.hpp"
#include "jjdeform/jumps.hpp"
#include "jjdeform/versal.hpp"
#include "property_checks.hpp"

using namespace jj;

namespace {

struct Criterion {
  std::vector<std::pair<bool, std::string>> items;
  void check(bool ok, std::string what) { items.emplace_back(ok, std::move(what)); }
  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.first; });
  }
};

std::vector<SymCochain> published(const std::string& name) {
  std::vector<SymCochain> out;
  auto a = catalog(name);
  for (const auto& s : reference_representatives(name)) out.push_back(parse_cochain(s, a.dim()));
  return out;
}

Matrix mat(std::vector<std::vector<Scalar>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix::from_rows(rows, cols);
}

Subspace relation_span(const std::vector<Polynomial>& rels, std::size_t n) {
  auto mons = quadratic_monomials(n);
  std::vector<Vector> rows;
  for (const auto& r : rels) {
    Vector v = zero_vector(mons.size());
    for (std::size_t s = 0; s < mons.size(); ++s) {
      Exponent e(n, 0);
      ++e[mons[s].first];
      ++e[mons[s].second];
      v[s] = r.coefficient(e);
    }
    rows.push_back(v);
  }
  return Subspace::span(rows, mons.size());
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string relations_text(const std::vector<Polynomial>& rels) {
  std::vector<std::string> s;
  for (const auto& r : rels) s.push_back(to_string(r));
  return "{" + join(s) + "}";
}

void versal_case(Criterion& c, const std::string& name, const std::vector<std::string>& expected_rels,
                 const std::vector<std::string>& expected_table) {
  Cohomology co(catalog(name));
  auto d = second_order_extension(co, published(name));
  std::vector<Polynomial> want;
  for (const auto& r : expected_rels) want.push_back(parse_polynomial(r, d.n_params));
  c.check(relation_span(d.relations, d.n_params) == relation_span(want, d.n_params),
          fmt::format("{} relations span {} (computed {})", name, relations_text(want), relations_text(d.relations)));
  c.check(verify_corrections(d), name + " corrections solve their coboundary equations");
  auto lines = format_table(versal_multiplication_table(d));
  for (const auto& w : expected_table) {
    bool hit = std::find(lines.begin(), lines.end(), w) != lines.end();
    std::string got;
    for (const auto& l : lines)
      if (l.substr(0, l.find('=')) == w.substr(0, w.find('='))) got = l;
    c.check(hit, hit ? name + " " + w : fmt::format("{} expected {} (computed {})", name, w, got.empty() ? "0" : got));
  }
}

// Columns are images of the J_1_4 basis in e, e1, e2, e*.
LinearMap case1_witness(const Scalar& root_k, const Scalar& l) {
  Matrix p(4, 4);
  p(0, 0) = 1 / root_k;
  p(1, 1) = 1;
  p(2, 1) = l / (root_k * root_k);
  p(2, 2) = 1;
  p(3, 3) = root_k / 2;
  return LinearMap(p);
}

LinearMap case2_witness(const Scalar& a11, const Scalar& a12, const Scalar& l) {
  Matrix p(4, 4);
  p(1, 0) = 1;
  p(3, 1) = -2 * a12;
  p(0, 2) = 1;
  p(1, 2) = -l / (2 * a12);
  p(1, 3) = a11;
  p(2, 3) = a12;
  p(3, 3) = l / 2;
  return LinearMap(p);
}

SpecialAdmissiblePair case2_pair(const Scalar& a11, const Scalar& a12, const Scalar& l) {
  Matrix d(2, 2);
  d(0, 0) = a11;
  d(1, 0) = a12;
  d(0, 1) = -(a11 * a11) / a12;
  d(1, 1) = -a11;
  return {LinearMap(d), Vector{l * a11 / a12, l}};
}

Criterion criterion1() {
  Criterion c;
  const std::vector<std::size_t> expected = {0, 4, 2, 15, 10, 2, 4, 8, 36, 27, 12, 16, 22, 8, 6, 10, 8, 4, 6, 13, 20, 1};
  auto rows = h2_table(catalog_names());
  c.check(rows.size() == expected.size(), fmt::format("{} algebras", rows.size()));
  for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i)
    c.check(rows[i].dim_h2 == expected[i],
            fmt::format("{}: dim H^2 = {} (expected {})", rows[i].name, rows[i].dim_h2, expected[i]));
  return c;
}

Criterion criterion2() {
  Criterion c;
  for (const auto& n : catalog_names()) {
    Cohomology co(catalog(n));
    auto reps = published(n);
    bool cocycles = std::all_of(reps.begin(), reps.end(), [&](const SymCochain& p) { return co.is_cocycle(p); });
    c.check(cocycles && verify_representatives(co, reps),
            fmt::format("{}: {} representatives, dim H^2 = {}", n, reps.size(), co.dim_h2()));
  }
  return c;
}

Criterion criterion3() {
  Criterion c;
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    Cohomology co(a);
    std::set<std::string> real, listed;
    for (const auto& s : reference_representatives(n)) {
      auto phi = parse_cochain(s, a.dim());
      if (classify_infinitesimal(co, phi).kind == Extendibility::real) real.insert(to_string(phi));
    }
    for (const auto& s : reference_extendible(n)) listed.insert(to_string(parse_cochain(s, a.dim())));
    c.check(real == listed, fmt::format("{}: {} extendible of {} listed", n, real.size(), listed.size()));
  }
  auto a = catalog("J_1_2+F");
  Cohomology co(a);
  auto reps = published("J_1_2+F");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto cl = classify_infinitesimal(co, reps[i]);
    std::string label = fmt::format("J_1_2+F phi{} = {}: {}", i + 1, to_string(reps[i]), to_string(cl.kind));
    if (i == 2) {
      c.check(cl.kind == Extendibility::real, label);
    } else if (i == 1) {
      bool ok = cl.kind == Extendibility::order2_then_obstructed && cl.order2_term &&
                *cl.order2_term == parse_cochain("-2e^{2,3}_3", 3);
      c.check(ok, label + (cl.order2_term ? ", order-2 term " + to_string(*cl.order2_term) : ""));
    } else {
      c.check(cl.kind == Extendibility::obstructed_at_2, label);
    }
  }
  return c;
}

Criterion criterion4() {
  Criterion c;
  versal_case(c, "J_1_2+F", {"t1^2", "t4^2", "t1*t2", "t1*t4", "t2*t4", "t3*t4 - 2*t1*t3"},
              {"(e1^2)_v = e2", "(e1e3)_v = t1*e1 + t2*e3", "(e2e3)_v = -2*t1*e2 - 2*t2^2*e3",
               "(e3^2)_v = t3*e2 + t4*e3 - 2*t2*t3*e1"});
  versal_case(c, "J_1_3", {"t1^2", "t1*t2", "t2^2"},
              {"(e1^2)_v = e2", "(e1e3)_v = t1*e1 + t2*e3", "(e2e3)_v = -2*t1*e2",
               "(e3^2)_v = e2 + 2*t1*e3 - 2*t2*e1"});
  return c;
}

Criterion criterion5() {
  Criterion c;
  auto a = catalog("J_1_2+F");
  FormalDeformation1 d{a, {parse_cochain("e^{3,3}_2", 3)}};
  for (int t : {1, 4}) {
    Scalar inv_root(1, t == 1 ? 1 : 2);
    Matrix p = Matrix::identity(3);
    p(2, 2) = inv_root;
    c.check(verify_jump(d, t, LinearMap(p), catalog("J_1_3")),
            fmt::format("J_1_2+F + t e^{{3,3}}_2 at t = {} is J_1_3 via e3 -> e3/{}", t, t == 1 ? 1 : 2));
  }
  using EdgeSet = std::set<std::pair<std::string, std::string>>;
  const std::map<std::size_t, EdgeSet> expected = {
      {3, {{"J_1_2+F", "J_1_3"}}},
      {4,
       {{"J_1_2+F2", "J_1_4"},
        {"J_1_2+F2", "J_1_3+F"},
        {"J_1_4", "J_1_2^2"},
        {"J_1_3+F", "J_1_2^2"},
        {"J_1_3+F", "J_2_4"}}}};
  for (const auto& [dim, want] : expected) {
    EdgeSet got;
    bool witnesses = true;
    for (const auto& e : jump_graph(dim)) {
      got.emplace(e.source, e.target);
      if (e.witness) witnesses = witnesses && verify_jump(edge_deformation(e), e.t0, *e.witness, catalog(e.target));
    }
    c.check(got == want, fmt::format("dim {} graph: {} edges (expected {})", dim, got.size(), want.size()));
    c.check(witnesses, fmt::format("dim {} bundled witnesses verify", dim));
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  auto j12 = catalog("J_1_2");
  auto j14 = catalog("J_1_4");
  c.check(verify_form(j14, {FormKind::symplectic, mat({{0, 0, 0, 1}, {0, 0, 2, 0}, {0, -2, 0, 0}, {-1, 0, 0, 0}})}),
          "omega on J_1_4");
  c.check(verify_form(j12, {FormKind::pseudo_euclidean, mat({{0, 1}, {1, 0}})}), "B on J_1_2");
  c.check(verify_form(j14, {FormKind::pseudo_euclidean, mat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})}),
          "B on J_1_4");
  const std::vector<std::pair<FormKind, std::set<std::string>>> surveys = {
      {FormKind::symplectic, {"J_1_4"}}, {FormKind::pseudo_euclidean, {"J_1_2", "J_1_4"}}};
  for (const auto& [kind, want] : surveys) {
    std::set<std::string> hits;
    bool witnesses = true;
    for (const auto& row : structure_survey(catalog_names(), kind)) {
      if (row.exists && is_indecomposable(row.name)) hits.insert(row.name);
      if (row.witness) witnesses = witnesses && verify_form(catalog(row.name), *row.witness);
    }
    c.check(hits == want, fmt::format("{} survey: indecomposable hits {{{}}}", to_string(kind),
                                      join(std::vector<std::string>(hits.begin(), hits.end()))));
    c.check(witnesses, fmt::format("{} survey witnesses verify", to_string(kind)));
  }
  return c;
}

Criterion criterion7() {
  Criterion c;
  auto f2 = trivial_algebra(2);
  BilinearForm w{FormKind::symplectic, mat({{0, 1}, {-1, 0}})};
  auto j14 = catalog("J_1_4");
  bool all_valid = true;
  auto record = [&](const std::pair<JJAlgebra, BilinearForm>& ext) {
    all_valid = all_valid && verify_jj(ext.first).empty() && verify_form(ext.first, ext.second);
  };
  auto e1 = double_extension(f2, w, {LinearMap::zero(2), Vector{1, 0}});
  record(e1);
  c.check(is_isomorphism(case1_witness(1, 0), j14, e1.first), "(F2, D = 0, A0 = e1) is J_1_4");
  bool fam = true;
  for (auto [a11, a12, l] : std::vector<std::array<Scalar, 3>>{{1, 1, 0}, {2, -1, 4}, {0, 3, 1}, {Scalar(1, 2), 1, -1}}) {
    auto ext = double_extension(f2, w, case2_pair(a11, a12, l));
    record(ext);
    fam = fam && is_isomorphism(case2_witness(a11, a12, l), j14, ext.first);
  }
  for (Scalar root : {Scalar(2), Scalar(1, 3)}) {
    auto ext = double_extension(f2, w, {LinearMap::zero(2), Vector{root * root, 1}});
    record(ext);
    fam = fam && is_isomorphism(case1_witness(root, 1), j14, ext.first);
  }
  c.check(fam, "Case-2 family and square parameters give J_1_4");
  auto zero = double_extension(f2, w, {LinearMap::zero(2), Vector{0, 0}});
  record(zero);
  c.check(zero.first.dim() == 4 && zero.first.is_trivial(), "(D = 0, A0 = 0) is the 4-dim trivial algebra");
  c.check(all_valid, "every output passes verify_jj and verify_form");
  return c;
}

Criterion criterion8() {
  using namespace jj::checks;
  Criterion c;
  std::map<std::string, Tally> tallies;
  bool rn = true, adj = true, leib = true, sq = true;
  std::mt19937 rng(kSeed);
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    auto merge = [&](const char* key, const Tally& t) {
      tallies[key].samples += t.samples;
      tallies[key].failures += t.failures;
    };
    merge("d o d = 0 on S^1 -> S^3", dd_s1(a, rng));
    merge("d o d = 0 on S^2 -> S^4", dd_s2(a, rng));
    merge("d phi = [phi0, phi] on S^2", d_is_bracket(a, rng));
    merge("graded antisymmetry", antisymmetry(a, rng));
    merge("graded Jacobi, at most two S^2 entries", jacobi_mixed(a, rng));
    merge("graded Jacobi, three S^2 entries", jacobi_s2(a, rng));
    auto phi0 = mult_cochain(a);
    sq = sq && bracket(phi0, phi0).is_zero();
    rn = rn && rank_nullity(a);
    adj = adj && verify_representation(a, adjoint_rep(a));
    leib = leib && (is_leibniz(a) == (n != "J_8_5"));
  }
  for (const auto& [key, t] : tallies)
    c.check(t.ok(), fmt::format("{}: {}/{} samples fail", key, t.failures, t.samples));
  c.check(sq, "[phi0, phi0] = 0");
  c.check(rn, "rank-nullity on every kernel computation");
  c.check(adj, "adjoint_rep verifies");
  c.check(leib, "is_leibniz fails exactly for J_8_5");
  return c;
}

Criterion criterion9() {
  Criterion c;
  Cohomology co(catalog("J_1_2+F"));
  auto reps = published("J_1_2+F");
  std::set<QuadMonomial> coboundary, zero;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      auto b = bracket(reps[i], reps[j]);
      if (b.is_zero())
        zero.insert({i, j});
      else if (co.coboundary3_witness(b))
        coboundary.insert({i, j});
    }
  c.check(coboundary == std::set<QuadMonomial>{{1, 1}, {1, 2}} && zero == std::set<QuadMonomial>{{2, 2}},
          "J_1_2+F: nonzero coboundary brackets exactly (phi2,phi2), (phi2,phi3); [phi3,phi3] = 0");
  std::vector<std::string> defined;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j)
      for (std::size_t k = j; k < reps.size(); ++k) {
        auto r = massey3(co, {reps[i], reps[j], reps[k]});
        if (r.kind != MasseyKind::undefined) defined.push_back(fmt::format("<{}{}{}>", i + 1, j + 1, k + 1));
      }
  c.check(defined == std::vector<std::string>{"<223>"},
          fmt::format("<phi2,phi2,phi3> is the only defined cube (defined: {})", join(defined)));
  Cohomology c13(catalog("J_1_3"));
  auto m13 = published("J_1_3");
  bool none = true;
  for (std::size_t i = 0; i < m13.size(); ++i)
    for (std::size_t j = i; j < m13.size(); ++j) {
      auto b = bracket(m13[i], m13[j]);
      none = none && !b.is_zero() && !c13.coboundary3_witness(b);
    }
  c.check(none, "J_1_3: no pairwise bracket is a coboundary, no cube defined");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Criterion()>>> criteria = {
      {"dim H^2 table", criterion1},
      {"representative cocycles", criterion2},
      {"extendibility classification", criterion3},
      {"versal second-order examples", criterion4},
      {"jump deformations", criterion5},
      {"bilinear structures", criterion6},
      {"double extensions", criterion7},
      {"property suites", criterion8},
      {"Massey products", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    fmt::print("[{}] {} {}\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first);
    for (const auto& [ok, what] : c.items) fmt::print("    {} {}\n", ok ? "ok  " : "FAIL", what);
    if (!c.ok()) ++failed;
  }
  fmt::print("{} of {} criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
