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

#include <array>
#include <random>

#include "jjdeform/bilinear.hpp"
#include "jjdeform/catalog.hpp"

using namespace jj;

namespace {

Matrix mat(std::vector<std::vector<Scalar>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix::from_rows(rows, cols);
}

Vector flat(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

const Matrix kOmegaJ14 = mat({{0, 0, 0, 1}, {0, 0, 2, 0}, {0, -2, 0, 0}, {-1, 0, 0, 0}});
const Matrix kBJ12 = mat({{0, 1}, {1, 0}});
const Matrix kBJ14 = mat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
const BilinearForm kOmegaF2{FormKind::symplectic, mat({{0, 1}, {-1, 0}})};

// Columns are images of the J_1_4 basis in e, e1, e2, e*.
LinearMap case1_witness(const Scalar& root_k, const Scalar& l) {
  Scalar k = root_k * root_k;
  Matrix p(4, 4);
  p(0, 0) = 1 / root_k;
  p(1, 1) = 1;
  p(2, 1) = l / k;
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

}  // namespace

TEST_CASE("anti-derivations") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    Vector x(a.dim());
    for (auto& v : x) v = dist(rng);
    CHECK(is_anti_derivation(a, left_mult(a, x)));
    CHECK(is_anti_derivation(a, LinearMap::zero(a.dim())));
  }
  CHECK_FALSE(is_anti_derivation(catalog("J_1_2"), LinearMap::identity(2)));
}

TEST_CASE("compatible form spaces") {
  CHECK(compatible_form_space(trivial_algebra(2), FormKind::symplectic).dim() == 1);
  CHECK(compatible_form_space(catalog("J_1_4"), FormKind::symplectic).contains(flat(kOmegaJ14)));
  CHECK(compatible_form_space(catalog("J_1_2"), FormKind::pseudo_euclidean).contains(flat(kBJ12)));
  CHECK(compatible_form_space(catalog("J_1_4"), FormKind::pseudo_euclidean).contains(flat(kBJ14)));
}

TEST_CASE("nondegenerate search") {
  auto s = find_nondegenerate(compatible_form_space(catalog("J_1_4"), FormKind::symplectic), FormKind::symplectic);
  REQUIRE(s.form.has_value());
  CHECK(verify_form(catalog("J_1_4"), *s.form));
  auto odd = find_nondegenerate(compatible_form_space(catalog("J_1_3"), FormKind::symplectic), FormKind::symplectic);
  CHECK_FALSE(odd.form.has_value());
  CHECK(odd.determinant.is_zero());
  auto p = find_nondegenerate(compatible_form_space(catalog("J_1_2"), FormKind::pseudo_euclidean),
                              FormKind::pseudo_euclidean);
  REQUIRE(p.form.has_value());
  CHECK(verify_form(catalog("J_1_2"), *p.form));
  CHECK(verify_form(catalog("J_1_2"), {FormKind::pseudo_euclidean, kBJ12}));
}

TEST_CASE("published forms") {
  CHECK(verify_form(catalog("J_1_4"), {FormKind::symplectic, kOmegaJ14}));
  CHECK(verify_form(catalog("J_1_4"), {FormKind::pseudo_euclidean, kBJ14}));
  CHECK(verify_form(catalog("J_1_2"), {FormKind::pseudo_euclidean, kBJ12}));
  CHECK_FALSE(verify_form(catalog("J_1_4"), {FormKind::symplectic, Matrix(4, 4)}));
  CHECK_FALSE(verify_form(catalog("J_1_4"), {FormKind::pseudo_euclidean, kOmegaJ14}));
}

TEST_CASE("adjoints") {
  CHECK(adjoint_map(kOmegaF2, LinearMap::identity(2)) == LinearMap::identity(2));
  CHECK(adjoint_map(kOmegaF2, LinearMap::zero(2)) == LinearMap::zero(2));
  CHECK(adjoint_map(kOmegaF2, LinearMap(mat({{1, 0}, {0, 2}}))) == LinearMap(mat({{2, 0}, {0, 1}})));
  CHECK_THROWS_AS(adjoint_map({FormKind::symplectic, Matrix(2, 2)}, LinearMap::identity(2)), Error);
  BilinearForm w{FormKind::symplectic, kOmegaJ14};
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    Matrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = static_cast<int>(rng() % 5) - 2;
    auto star = adjoint_map(w, LinearMap(g));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(w(g * unit_vector(4, i), unit_vector(4, j)) == w(unit_vector(4, i), star(unit_vector(4, j))));
  }
}

TEST_CASE("special admissible pairs") {
  auto f2 = trivial_algebra(2);
  CHECK(is_special_admissible(f2, kOmegaF2, {LinearMap::zero(2), Vector{1, 0}}));
  CHECK(is_special_admissible(f2, kOmegaF2, {LinearMap::zero(2), Vector{0, 0}}));
  CHECK(is_special_admissible(f2, kOmegaF2, case2_pair(1, 2, 3)));
  CHECK(is_special_admissible(f2, kOmegaF2, case2_pair(0, 1, 0)));
  // A0 off the kernel of D.
  auto off = case2_pair(1, 2, 3);
  off.a0 = Vector{1, 0};
  CHECK_FALSE(is_special_admissible(f2, kOmegaF2, off));
  CHECK_FALSE(is_special_admissible(f2, kOmegaF2, {LinearMap::identity(2), Vector{0, 0}}));
}

TEST_CASE("double extensions of F2") {
  auto f2 = trivial_algebra(2);
  auto [zero, wz] = double_extension(f2, kOmegaF2, {LinearMap::zero(2), Vector{0, 0}});
  CHECK(zero.is_trivial());
  CHECK(zero.dim() == 4);
  CHECK(verify_form(zero, wz));

  for (Scalar root : {Scalar(1), Scalar(2), Scalar(1, 3)}) {
    for (Scalar l : {Scalar(0), Scalar(1), Scalar(-5, 2)}) {
      auto [ext, w] = double_extension(f2, kOmegaF2, {LinearMap::zero(2), Vector{root * root, l}});
      CHECK(verify_jj(ext).empty());
      CHECK(verify_form(ext, w));
      CHECK(is_isomorphism(case1_witness(root, l), catalog("J_1_4"), ext));
    }
  }
  // k = 0, l != 0.
  for (Scalar l : {Scalar(1), Scalar(-3)}) {
    auto [ext, w] = double_extension(f2, kOmegaF2, {LinearMap::zero(2), Vector{0, l}});
    Matrix p(4, 4);
    p(0, 0) = 1;
    p(2, 1) = l;
    p(1, 2) = 1;
    p(3, 3) = -l / 2;
    CHECK(is_isomorphism(LinearMap(p), catalog("J_1_4"), ext));
  }
  for (auto [a11, a12, l] : std::vector<std::array<Scalar, 3>>{{1, 1, 0}, {2, -1, 4}, {0, 3, 1}, {Scalar(1, 2), 1, -1}}) {
    auto [ext, w] = double_extension(f2, kOmegaF2, case2_pair(a11, a12, l));
    CHECK(verify_jj(ext).empty());
    CHECK(verify_form(ext, w));
    CHECK(is_isomorphism(case2_witness(a11, a12, l), catalog("J_1_4"), ext));
  }
  CHECK_THROWS_AS(double_extension(f2, kOmegaF2, {LinearMap::identity(2), Vector{0, 0}}), Error);
}

TEST_CASE("double extension of the zero algebra") {
  auto [ext, w] = double_extension(trivial_algebra(0), {FormKind::symplectic, Matrix(0, 0)},
                                   {LinearMap::zero(0), Vector{}});
  CHECK(ext.dim() == 2);
  CHECK(ext.is_trivial());
  CHECK(verify_form(ext, w));
}

TEST_CASE("isometries") {
  auto j14 = catalog("J_1_4");
  BilinearForm w{FormKind::symplectic, kOmegaJ14};
  CHECK(i_isometry_check(LinearMap::identity(4), j14, w, j14, w));
  CHECK_FALSE(i_isometry_check(LinearMap::zero(4), j14, w, j14, w));
  CHECK_THROWS_AS(i_isometry_check(LinearMap::identity(2), j14, w, j14, w), Error);

  auto [ext, wt] = double_extension(trivial_algebra(2), kOmegaF2, {LinearMap::zero(2), Vector{1, 0}});
  auto p = case1_witness(1, 0);
  auto transported = pull_back(wt, p);
  CHECK(verify_form(j14, transported));
  CHECK(i_isometry_check(p, j14, transported, ext, wt));
  // The transported form is half of the published one.
  CHECK(transported.matrix == kOmegaJ14.scaled(Scalar(1, 2)));
  CHECK_FALSE(i_isometry_check(p, j14, w, ext, wt));
}

TEST_CASE("structure surveys") {
  auto sym = structure_survey(catalog_names(), FormKind::symplectic);
  auto pse = structure_survey(catalog_names(), FormKind::pseudo_euclidean);
  std::vector<std::string> sym_hits, pse_hits;
  for (const auto& r : sym)
    if (r.exists && is_indecomposable(r.name)) sym_hits.push_back(r.name);
  for (const auto& r : pse)
    if (r.exists && is_indecomposable(r.name)) pse_hits.push_back(r.name);
  CHECK(sym_hits == std::vector<std::string>{"J_1_4"});
  CHECK(pse_hits == std::vector<std::string>{"J_1_2", "J_1_4"});
  for (const auto& r : sym) {
    if (catalog(r.name).dim() % 2 == 1) CHECK_FALSE(r.exists);
    if (r.exists) CHECK(verify_form(catalog(r.name), *r.witness));
  }

  std::vector<JJAlgebra> trivial{trivial_algebra(2), trivial_algebra(3), trivial_algebra(4)};
  for (const auto& r : structure_survey(trivial, FormKind::pseudo_euclidean)) CHECK(r.exists);
  auto ts = structure_survey(trivial, FormKind::symplectic);
  CHECK(ts[0].exists);
  CHECK_FALSE(ts[1].exists);
  CHECK(ts[2].exists);

  // Existence is invariant under a change of basis.
  std::mt19937 rng(4);
  std::vector<JJAlgebra> moved;
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    Matrix p;
    do {
      p = Matrix(a.dim(), a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) p(i, j) = static_cast<int>(rng() % 5) - 2;
    } while (sgn(determinant(p)) == 0);
    moved.push_back(apply_basis_change(a, LinearMap(p)));
  }
  auto sym_moved = structure_survey(moved, FormKind::symplectic);
  auto pse_moved = structure_survey(moved, FormKind::pseudo_euclidean);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    CHECK(sym_moved[i].exists == sym[i].exists);
    CHECK(pse_moved[i].exists == pse[i].exists);
  }
}

TEST_CASE("double extensions of J_1_4") {
  auto j14 = catalog("J_1_4");
  BilinearForm w{FormKind::symplectic, kOmegaJ14};
  // A0 in the annihilator with D = 0 satisfies D^2 = -1/2 L_{A0} = 0.
  std::size_t built = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    SpecialAdmissiblePair pair{LinearMap::zero(4), unit_vector(4, i)};
    if (!is_special_admissible(j14, w, pair)) continue;
    auto [ext, wt] = double_extension(j14, w, pair);
    CHECK(verify_jj(ext).empty());
    CHECK(verify_form(ext, wt));
    ++built;
  }
  CHECK(built >= 1);
}
