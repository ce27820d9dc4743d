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

#include "jjdeform/cohomology.hpp"

#include <utility>

#include "jjdeform/catalog.hpp"

namespace jj {

Cohomology::Cohomology(JJAlgebra a)
    : a_(std::move(a)),
      d1_(differential_matrix(a_, 1)),
      d2_(differential_matrix(a_, 2)),
      z2_(kernel_basis(d2_)),
      b2_(Subspace::column_space(d1_)),
      d1_solver_(d1_),
      d2_solver_(d2_),
      h2_(b2_, z2_) {}

std::vector<SymCochain> Cohomology::representatives() const {
  std::vector<SymCochain> out;
  for (const auto& r : h2_.representatives())
    out.push_back(SymCochain::from_vector(a_.dim(), 2, r));
  return out;
}

std::vector<SymCochain> Cohomology::z2_basis() const {
  std::vector<SymCochain> out;
  for (std::size_t i = 0; i < z2_.dim(); ++i)
    out.push_back(SymCochain::from_vector(a_.dim(), 2, z2_.basis_vector(i)));
  return out;
}

CohomologySummary Cohomology::summary() const {
  return {a_.name(), z2_.dim(), b2_.dim(), h2_.dim(), representatives()};
}

bool Cohomology::is_cocycle(const SymCochain& phi) const {
  if (phi.degree() != 2 || phi.dim() != a_.dim()) throw Error("is_cocycle: expected a 2-cochain");
  return z2_.contains(phi.coeffs());
}

std::optional<SymCochain> Cohomology::coboundary2_witness(const SymCochain& phi) const {
  if (phi.degree() != 2 || phi.dim() != a_.dim()) throw Error("coboundary test: expected a 2-cochain");
  auto x = d1_solver_.solve(phi.coeffs());
  if (!x) return std::nullopt;
  return SymCochain::from_vector(a_.dim(), 1, std::move(*x));
}

std::optional<SymCochain> Cohomology::coboundary3_witness(const SymCochain& omega) const {
  if (omega.degree() != 3 || omega.dim() != a_.dim()) throw Error("coboundary test: expected a 3-cochain");
  auto x = d2_solver_.solve(omega.coeffs());
  if (!x) return std::nullopt;
  return SymCochain::from_vector(a_.dim(), 2, std::move(*x));
}

Vector Cohomology::h2_class(const SymCochain& phi) const {
  if (!is_cocycle(phi)) throw Error("h2_class: not a cocycle");
  return h2_.reduce(phi.coeffs());
}

Subspace z2(const JJAlgebra& a) { return kernel_basis(differential_matrix(a, 2)); }
Subspace b2(const JJAlgebra& a) { return Subspace::column_space(differential_matrix(a, 1)); }
Subspace b3(const JJAlgebra& a) { return Subspace::column_space(differential_matrix(a, 2)); }
CohomologySummary h2(const JJAlgebra& a) { return Cohomology(a).summary(); }

bool is_cocycle(const JJAlgebra& a, const SymCochain& phi) {
  return differential(a, phi).is_zero();
}

std::optional<SymCochain> is_coboundary2(const JJAlgebra& a, const SymCochain& phi) {
  auto x = solve(differential_matrix(a, 1), phi.coeffs());
  if (!x) return std::nullopt;
  return SymCochain::from_vector(a.dim(), 1, std::move(*x));
}

std::optional<SymCochain> is_coboundary3(const JJAlgebra& a, const SymCochain& omega) {
  auto x = solve(differential_matrix(a, 2), omega.coeffs());
  if (!x) return std::nullopt;
  return SymCochain::from_vector(a.dim(), 2, std::move(*x));
}

bool verify_representatives(const Cohomology& c, const std::vector<SymCochain>& list) {
  if (list.size() != c.dim_h2()) return false;
  std::vector<Vector> classes;
  for (const auto& phi : list) {
    if (phi.dim() != c.algebra().dim() || phi.degree() != 2) return false;
    if (!c.is_cocycle(phi)) return false;
    classes.push_back(c.h2_class(phi));
  }
  if (list.empty()) return true;
  return rank(Matrix::from_rows(classes, c.dim_h2())) == list.size();
}

bool verify_representatives(const JJAlgebra& a, const std::vector<SymCochain>& list) {
  return verify_representatives(Cohomology(a), list);
}

namespace {

H2Row row_for(const std::string& name) {
  Cohomology c(catalog(name));
  return {canonical_name(name), c.algebra().dim(), c.z2().dim(), c.b2().dim(), c.dim_h2()};
}

}  // namespace

namespace serial {
std::vector<H2Row> h2_table(const std::vector<std::string>& names) {
  std::vector<H2Row> rows;
  for (const auto& n : names) rows.push_back(row_for(n));
  return rows;
}
}  // namespace serial

namespace parallel {
std::vector<H2Row> h2_table(const std::vector<std::string>& names) {
  // Validate names up front so errors surface outside the parallel region.
  for (const auto& n : names) (void)canonical_name(n);
  std::vector<H2Row> rows(names.size());
  const long long n = static_cast<long long>(names.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = row_for(names[static_cast<std::size_t>(i)]);
  return rows;
}
}  // namespace parallel

std::vector<H2Row> h2_table(const std::vector<std::string>& names) {
  return parallel::h2_table(names);
}

}  // namespace jj
