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

#include "jjdeform/algebra.hpp"

#include <algorithm>

#include "jjdeform/cohomology.hpp"

namespace jj {

std::size_t pair_index(std::size_t m, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= m) throw Error("basis index out of range");
  // Pairs (0,0),(0,1),..,(0,m-1),(1,1),.. in lexicographic order.
  return i * m - (i * (i + 1)) / 2 + j;
}

JJAlgebra::JJAlgebra(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), table_(dim * (dim + 1) / 2, zero_vector(dim)) {}

const Vector& JJAlgebra::basis_product(std::size_t i, std::size_t j) const {
  return table_.at(pair_index(dim_, i, j));
}

void JJAlgebra::set_product(std::size_t i, std::size_t j, Vector coeffs) {
  if (coeffs.size() != dim_) throw Error("product coefficient length mismatch");
  table_.at(pair_index(dim_, i, j)) = std::move(coeffs);
}

void JJAlgebra::add_product(std::size_t i, std::size_t j, std::size_t k, const Scalar& coef) {
  if (k >= dim_) throw Error("basis index out of range");
  table_.at(pair_index(dim_, i, j))[k] += coef;
}

Vector JJAlgebra::product(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("product: dimension mismatch");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      axpy(out, x[i] * y[j], basis_product(i, j));
    }
  }
  return out;
}

bool JJAlgebra::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return is_zero(v); });
}

bool JJAlgebra::same_constants(const JJAlgebra& other) const {
  return dim_ == other.dim_ && table_ == other.table_;
}

std::vector<IndexTriple> verify_jj(const JJAlgebra& a) {
  const std::size_t m = a.dim();
  std::vector<IndexTriple> bad;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        Vector ei = unit_vector(m, i), ej = unit_vector(m, j), ek = unit_vector(m, k);
        Vector s = a.product(ei, a.basis_product(j, k));
        s = add(s, a.product(ej, a.basis_product(k, i)));
        s = add(s, a.product(ek, a.basis_product(i, j)));
        if (!is_zero(s)) bad.push_back({i, j, k});
      }
  return bad;
}

JJAlgebra trivial_algebra(std::size_t m) { return JJAlgebra("F^" + std::to_string(m), m); }

JJAlgebra heisenberg(std::size_t m) {
  if (m == 0) throw Error("heisenberg: m must be positive");
  // Basis x_1..x_m, y_1..y_m, z.
  JJAlgebra a("H_" + std::to_string(m), 2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) a.add_product(i, m + i, 2 * m, 1);
  return a;
}

JJAlgebra direct_sum(const JJAlgebra& a, const JJAlgebra& b) {
  std::string name = a.name();
  if (b.dim() > 0) name += "+" + b.name();
  JJAlgebra s(name, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vector& v = a.basis_product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (v[k] != 0) s.add_product(i, j, k, v[k]);
    }
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j) {
      const Vector& v = b.basis_product(i, j);
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (v[k] != 0) s.add_product(o + i, o + j, o + k, v[k]);
    }
  return s;
}

JJAlgebra apply_basis_change(const JJAlgebra& a, const LinearMap& p) {
  const std::size_t m = a.dim();
  if (p.dim() != m || p.matrix.cols() != m) throw Error("basis change: dimension mismatch");
  auto inv = inverse(p.matrix);
  if (!inv) throw Error("basis change: singular matrix");
  JJAlgebra b(a.name(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      b.set_product(i, j, *inv * a.product(p.matrix.column(i), p.matrix.column(j)));
  return b;
}

bool is_isomorphism(const LinearMap& p, const JJAlgebra& a, const JJAlgebra& b) {
  const std::size_t m = a.dim();
  if (b.dim() != m || p.matrix.rows() != m || p.matrix.cols() != m) return false;
  if (determinant(p.matrix) == 0) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vector lhs = p(a.basis_product(i, j));
      Vector rhs = b.product(p.matrix.column(i), p.matrix.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

Subspace square_span(const JJAlgebra& a) {
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) prods.push_back(a.basis_product(i, j));
  return Subspace::span(prods, a.dim());
}

Subspace annihilator(const JJAlgebra& a) {
  // x in ann iff sum_i x_i c(i,j) = 0 for every j.
  const std::size_t m = a.dim();
  Matrix rows(m * m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i) rows(j * m + k, i) = a.basis_product(i, j)[k];
  return kernel_basis(rows);
}

Fingerprint fingerprint(const JJAlgebra& a, bool with_h2) {
  Fingerprint f;
  f.dim = a.dim();
  f.dim_square = square_span(a).dim();
  f.dim_annihilator = annihilator(a).dim();
  if (with_h2) f.dim_h2 = h2(a).dim_h2;
  return f;
}

LinearMap left_mult(const JJAlgebra& a, const Vector& x) {
  const std::size_t m = a.dim();
  if (x.size() != m) throw Error("left_mult: dimension mismatch");
  Matrix l(m, m);
  for (std::size_t j = 0; j < m; ++j) l.set_column(j, a.product(x, unit_vector(m, j)));
  return LinearMap(l);
}

bool verify_representation(const JJAlgebra& a, const Representation& r) {
  const std::size_t m = a.dim();
  if (r.pi.size() != m) throw Error("representation: wrong number of matrices");
  for (const auto& p : r.pi)
    if (p.rows() != r.dim_v || p.cols() != r.dim_v)
      throw Error("representation: matrix size mismatch");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Matrix lhs = r.pi[i] * r.pi[j] + r.pi[j] * r.pi[i];
      Matrix rhs(r.dim_v, r.dim_v);
      const Vector& c = a.basis_product(i, j);
      for (std::size_t k = 0; k < m; ++k)
        if (c[k] != 0) rhs = rhs - r.pi[k].scaled(c[k]);
      if (lhs != rhs) return false;
    }
  return true;
}

Representation adjoint_rep(const JJAlgebra& a) {
  Representation r;
  r.dim_v = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    r.pi.push_back(left_mult(a, unit_vector(a.dim(), i)).matrix);
  return r;
}

bool is_leibniz(const JJAlgebra& a) {
  const std::size_t m = a.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector x = unit_vector(m, i), y = unit_vector(m, j), z = unit_vector(m, k);
        Vector lhs = a.product(x, a.product(y, z));
        Vector rhs = add(a.product(a.product(x, y), z), a.product(y, a.product(x, z)));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace jj
