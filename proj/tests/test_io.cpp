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


#include <doctest.h>

#include "jjdeform/catalog.hpp"
#include "jjdeform/io.hpp"

using namespace jj;

TEST_CASE("algebra JSON") {
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    auto back = algebra_from_json(to_json(a));
    CHECK(back.same_constants(a));
    CHECK(back.name() == a.name());
  }
  auto j = Json::parse(R"({"name":"J12","dim":2,"products":[{"i":1,"j":1,"coeffs":["0","1"]}]})");
  CHECK(algebra_from_json(j).same_constants(catalog("J_1_2")));
  CHECK(to_json(catalog("J_1_2")).dump() ==
        R"({"name":"J_1_2","dim":2,"products":[{"i":1,"j":1,"coeffs":["0","1"]}]})");
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":2,"products":[{"i":3,"j":1,"coeffs":["0","1"]}]})")), Error);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"name":"x"})")), Error);
}

TEST_CASE("cochain JSON") {
  auto c = parse_cochain("e^{1,3}_1 - 2e^{2,3}_2 + (1/2)e^{3,3}_3", 3);
  auto j = to_json(c);
  CHECK(j["terms"][2]["coeff"] == "1/2");
  CHECK(j["terms"][0]["args"] == Json::array({1, 3}));
  CHECK(cochain_from_json(j) == c);
  auto w = parse_cochain("e^{1,2,2}_3", 3);
  CHECK(cochain_from_json(to_json(w)) == w);
}

TEST_CASE("deformation, form and basis change JSON") {
  FormalDeformation1 d{catalog("J_1_2+F"), {parse_cochain("e^{1,3}_3", 3), parse_cochain("-2e^{2,3}_3", 3)}};
  auto dj = to_json(d);
  CHECK(dj["order"] == 2);
  auto back = deformation_from_json(dj);
  CHECK(back.base.same_constants(d.base));
  CHECK(back.terms == d.terms);

  BilinearForm f{FormKind::pseudo_euclidean, Matrix::identity(3).scaled(Scalar(-2, 3))};
  CHECK(form_from_json(to_json(f)) == f);
  CHECK(form_from_json(Json::parse(R"({"kind":"symplectic","matrix":[["0","1"],["-1","0"]]})")).matrix(1, 0) == -1);

  LinearMap p(Matrix::identity(2).scaled(Scalar(1, 2)));
  CHECK(basis_change_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(basis_change_from_json(Json::parse(R"({"matrix":[["1","0"]]})")), Error);
}

TEST_CASE("versal report JSON") {
  Cohomology c(catalog("J_1_2+F"));
  std::vector<SymCochain> reps;
  for (const auto& s : reference_representatives("J_1_2+F")) reps.push_back(parse_cochain(s, 3));
  auto d = second_order_extension(c, reps);
  auto j = to_json(d);
  CHECK(j["n_params"] == 4);
  CHECK(j["relations"].size() == 6);
  auto back = versal_from_json(j);
  CHECK(back.base.same_constants(d.base));
  CHECK(back.first_order == d.first_order);
  CHECK(back.relations == d.relations);
  CHECK(back.corrections == d.corrections);
  CHECK(back.truncation == d.truncation);
  CHECK(to_json(back) == j);
}

TEST_CASE("graph output") {
  auto g = jump_graph(4);
  auto j = graph_to_json(4, g);
  CHECK(j["edges"].size() == 5);
  auto back = graph_from_json(j);
  REQUIRE(back.size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(back[i].source == g[i].source);
    CHECK(back[i].target == g[i].target);
    CHECK(back[i].status == g[i].status);
    CHECK(back[i].t0 == g[i].t0);
    CHECK(back[i].witness == g[i].witness);
  }
  CHECK(graph_to_json(4, back) == j);
  auto dot = graph_to_dot(3, jump_graph(3));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"J_1_2+F\" -> \"J_1_3\" [status=\"verified\"") != std::string::npos);
  auto dot5 = graph_to_dot(5, jump_graph(5));
  CHECK(dot5.find("status=\"asserted\"") != std::string::npos);
}

TEST_CASE("table and survey JSON") {
  auto rows = h2_table(catalog_names(3));
  CHECK(h2_table_from_json(to_json(rows)) == rows);
  auto survey = structure_survey(catalog_names(2), FormKind::pseudo_euclidean);
  auto back = survey_from_json(to_json(survey, FormKind::pseudo_euclidean));
  REQUIRE(back.size() == survey.size());
  CHECK(back[0].name == survey[0].name);
  CHECK(back[0].exists == survey[0].exists);
  CHECK(back[0].witness == survey[0].witness);
  CHECK(to_json(back, FormKind::pseudo_euclidean) == to_json(survey, FormKind::pseudo_euclidean));
}
