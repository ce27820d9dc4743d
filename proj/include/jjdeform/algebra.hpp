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

#ifndef JJDEFORM_ALGEBRA_HPP_
#define JJDEFORM_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jjdeform/linalg.hpp"

namespace jj {

/// Index of the unordered pair {i, j} among pairs i <= j of {0..m-1}.
std::size_t pair_index(std::size_t m, std::size_t i, std::size_t j);

/// Commutative algebra given by structure constants c(i,j) for i <= j.
/// Nothing here enforces the Jacobi identity; see verify_jj.
class JJAlgebra {
 public:
  JJAlgebra() = default;
  JJAlgebra(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }

  /// e_i * e_j, indices 0-based and in either order.
  const Vector& basis_product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, Vector coeffs);
  /// Adds coef * e_k to e_i * e_j.
  void add_product(std::size_t i, std::size_t j, std::size_t k, const Scalar& coef);

  Vector product(const Vector& x, const Vector& y) const;
  bool is_trivial() const;

  /// Structural equality of the constants; the name is ignored.
  bool same_constants(const JJAlgebra& other) const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
};

/// Square matrix acting on coordinates; column j is the image of e_j.
struct LinearMap {
  Matrix matrix;

  LinearMap() = default;
  explicit LinearMap(Matrix m) : matrix(std::move(m)) {}
  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
  static LinearMap zero(std::size_t n) { return LinearMap(Matrix(n, n)); }

  std::size_t dim() const { return matrix.rows(); }
  Vector operator()(const Vector& v) const { return matrix * v; }
  LinearMap compose(const LinearMap& inner) const {
    return LinearMap(matrix * inner.matrix);
  }
  bool operator==(const LinearMap& other) const = default;
};

struct Representation {
  std::size_t dim_v = 0;
  std::vector<Matrix> pi;
};

using IndexTriple = std::array<std::size_t, 3>;

/// Basis triples i <= j <= k (0-based) where the cyclic Jacobi sum is nonzero.
std::vector<IndexTriple> verify_jj(const JJAlgebra& a);

JJAlgebra trivial_algebra(std::size_t m);
JJAlgebra heisenberg(std::size_t m);
JJAlgebra direct_sum(const JJAlgebra& a, const JJAlgebra& b);

/// The algebra b with constants chosen so that p : b -> a is an isomorphism.
JJAlgebra apply_basis_change(const JJAlgebra& a, const LinearMap& p);

/// True iff p is invertible and p(x *_a y) = p(x) *_b p(y) on basis pairs.
bool is_isomorphism(const LinearMap& p, const JJAlgebra& a, const JJAlgebra& b);

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_square = 0;
  std::size_t dim_annihilator = 0;
  std::optional<std::size_t> dim_h2;
  bool operator==(const Fingerprint& other) const = default;
};

Subspace square_span(const JJAlgebra& a);
Subspace annihilator(const JJAlgebra& a);
/// H² is filled in only on request since it costs a cohomology computation.
Fingerprint fingerprint(const JJAlgebra& a, bool with_h2 = false);

LinearMap left_mult(const JJAlgebra& a, const Vector& x);
bool verify_representation(const JJAlgebra& a, const Representation& r);
Representation adjoint_rep(const JJAlgebra& a);
bool is_leibniz(const JJAlgebra& a);

}  // namespace jj

#endif  // JJDEFORM_ALGEBRA_HPP_
