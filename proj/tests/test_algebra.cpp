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

#include <random>

#include "jjdeform/algebra.hpp"
#include "jjdeform/catalog.hpp"

using namespace jj;

namespace {

Vector e(std::size_t m, std::size_t i) { return unit_vector(m, i - 1); }

LinearMap random_invertible(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    Matrix p(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) p(i, j) = dist(rng);
    if (sgn(determinant(p)) != 0) return LinearMap(p);
  }
}

}  // namespace

TEST_CASE("products from the classification") {
  auto j12 = catalog("J_{1,2}");
  CHECK(j12.product(e(2, 1), e(2, 1)) == e(2, 2));
  CHECK(is_zero(j12.product(Vector{3, 5}, zero_vector(2))));
  auto j85 = catalog("J_{8,5}");
  CHECK(j85.product(e(5, 2), e(5, 4)) == scale(e(5, 3), 2));
  CHECK(j85.product(e(5, 1), e(5, 5)) == scale(e(5, 3), -1));
  CHECK_THROWS_AS(j12.product(Vector{1}, Vector{1, 0}), Error);
}

TEST_CASE("catalog entries") {
  auto j13 = catalog("J_{1,3}");
  CHECK(j13.dim() == 3);
  CHECK(j13.basis_product(0, 0) == e(3, 2));
  CHECK(j13.basis_product(2, 2) == e(3, 2));
  CHECK(is_zero(j13.basis_product(0, 2)));

  auto j35 = catalog("J_{3,5}");
  CHECK(j35.basis_product(0, 0) == e(5, 2));
  CHECK(j35.basis_product(0, 3) == e(5, 5));
  CHECK(j35.basis_product(2, 3) == e(5, 5));
  CHECK(j35.basis_product(2, 2) == add(scale(e(5, 2), -1), e(5, 5)));

  auto f3 = catalog("F^3");
  CHECK(f3.dim() == 3);
  CHECK(f3.is_trivial());

  CHECK(catalog_names().size() == 22);
  CHECK_THROWS_AS(catalog("J_9_9"), Error);
  CHECK(canonical_name("J_{1,2}\\oplus F^2") == "J_1_2+F2");
  CHECK(catalog("J_{1,2}(+)F").same_constants(catalog("J_1_2+F")));
}

TEST_CASE("Jacobi identity") {
  for (const auto& n : catalog_names()) {
    INFO(n);
    CHECK(verify_jj(catalog(n)).empty());
  }
  JJAlgebra bad("idempotent", 1);
  bad.set_product(0, 0, Vector{1});
  auto v = verify_jj(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == IndexTriple{0, 0, 0});
  CHECK(verify_jj(trivial_algebra(4)).empty());
}

TEST_CASE("Heisenberg algebras") {
  auto h1 = heisenberg(1);
  CHECK(h1.dim() == 3);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) nonzero += !is_zero(h1.basis_product(i, j));
  CHECK(nonzero == 1);
  CHECK(verify_jj(heisenberg(2)).empty());
  CHECK(heisenberg(2).dim() == 5);
  CHECK_THROWS_AS(heisenberg(0), Error);
  // No rational witness exists; the invariants agree.
  CHECK(fingerprint(h1, true) == fingerprint(catalog("J_1_3"), true));
  CHECK(fingerprint(h1, true) == Fingerprint{3, 1, 1, 2});
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(catalog("J_1_2"), trivial_algebra(1)).same_constants(catalog("J_1_2+F")));
  auto a = catalog("J_1_4");
  CHECK(direct_sum(a, trivial_algebra(0)).same_constants(a));
  CHECK(direct_sum(catalog("J_1_2"), catalog("J_1_3")).same_constants(catalog("J_1_2+J_1_3")));
  auto s = direct_sum(catalog("J_1_2"), catalog("J_1_3"));
  CHECK(verify_jj(s).empty());
  CHECK(is_zero(s.basis_product(0, 2)));
}

TEST_CASE("basis changes and isomorphisms") {
  auto a = catalog("J_1_2+F");
  CHECK(apply_basis_change(a, LinearMap::identity(3)).same_constants(a));
  CHECK(apply_basis_change(trivial_algebra(3), LinearMap(Matrix::identity(3).scaled(2))).is_trivial());
  CHECK_THROWS_AS(apply_basis_change(a, LinearMap::zero(3)), Error);

  CHECK(is_isomorphism(LinearMap::identity(3), a, a));
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK_FALSE(is_isomorphism(LinearMap(swap), catalog("J_1_2"), catalog("J_1_2")));
  CHECK_FALSE(is_isomorphism(LinearMap::zero(3), a, a));

  std::mt19937 rng(11);
  for (const auto& n : catalog_names()) {
    auto b = catalog(n);
    LinearMap p = random_invertible(rng, b.dim());
    auto moved = apply_basis_change(b, p);
    INFO(n);
    CHECK(is_isomorphism(p, moved, b));
    CHECK(verify_jj(moved).empty());
    CHECK(fingerprint(moved) == fingerprint(b));
  }
}

TEST_CASE("fingerprints") {
  auto f = fingerprint(catalog("J_1_2"));
  CHECK(f.dim == 2);
  CHECK(f.dim_square == 1);
  CHECK(f.dim_annihilator == 1);
  CHECK(fingerprint(trivial_algebra(4)) == Fingerprint{4, 0, 4, std::nullopt});
  CHECK(fingerprint(catalog("J_1_3")).dim_annihilator == 1);
  CHECK(fingerprint(catalog("J_1_2+F")).dim_annihilator == 2);
  CHECK_FALSE(fingerprint(catalog("J_1_3")) == fingerprint(catalog("J_1_2+F")));
}

TEST_CASE("representations") {
  CHECK(verify_representation(catalog("J_1_2"), adjoint_rep(catalog("J_1_2"))));
  for (const auto& n : catalog_names()) CHECK(verify_representation(catalog(n), adjoint_rep(catalog(n))));
  Representation zero{3, std::vector<Matrix>(2, Matrix(3, 3))};
  CHECK(verify_representation(catalog("J_1_2"), zero));
  Representation id{2, {Matrix::identity(2), Matrix(2, 2)}};
  CHECK_FALSE(verify_representation(catalog("J_1_2"), id));
  Representation wrong{2, {Matrix::identity(2)}};
  CHECK_THROWS_AS(verify_representation(catalog("J_1_2"), wrong), Error);
}

TEST_CASE("Leibniz property") {
  CHECK(is_leibniz(catalog("J_1_4")));
  CHECK_FALSE(is_leibniz(catalog("J_8_5")));
  CHECK(is_leibniz(trivial_algebra(3)));
  for (const auto& n : catalog_names()) CHECK(is_leibniz(catalog(n)) == (n != "J_8_5"));
}

TEST_CASE("left multiplication") {
  auto l = left_mult(catalog("J_1_2"), e(2, 1));
  CHECK(l(e(2, 1)) == e(2, 2));
  CHECK(is_zero(l(e(2, 2))));
  CHECK(left_mult(catalog("J_1_2"), zero_vector(2)) == LinearMap::zero(2));
  CHECK(left_mult(catalog("J_1_3"), e(3, 3))(e(3, 3)) == e(3, 2));
}

TEST_CASE("commutativity is structural") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (const auto& n : catalog_names()) {
    auto a = catalog(n);
    Vector x(a.dim()), y(a.dim());
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    CHECK(a.product(x, y) == a.product(y, x));
  }
}
