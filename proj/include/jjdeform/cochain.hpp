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

#ifndef JJDEFORM_COCHAIN_HPP_
#define JJDEFORM_COCHAIN_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/linalg.hpp"

namespace jj {

constexpr std::size_t kMaxCochainDegree = 4;

using Multiset = std::vector<std::size_t>;

/// Nondecreasing index tuples of length n over {0..m-1}, lexicographic.
class CochainShape {
 public:
  CochainShape(std::size_t m, std::size_t n);

  std::size_t dim() const { return m_; }
  std::size_t degree() const { return n_; }
  std::size_t multiset_count() const { return multisets_.size(); }
  const std::vector<Multiset>& multisets() const { return multisets_; }
  const Multiset& multiset(std::size_t idx) const { return multisets_[idx]; }
  /// Position of the multiset of `tuple` (any order).
  std::size_t index_of(const std::vector<std::size_t>& tuple) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Multiset> multisets_;
  std::vector<std::size_t> lookup_;  // base-m code of a sorted tuple -> index
};

/// Shared, immutable shape for (m, n); safe to call from several threads.
const CochainShape& cochain_shape(std::size_t m, std::size_t n);

std::size_t cochain_space_dim(std::size_t m, std::size_t n);

/// Symmetric n-linear map J^n -> J. Coordinate multiset_index * m + k holds
/// the e_k component of the value on the basis multiset.
class SymCochain {
 public:
  SymCochain() = default;
  SymCochain(std::size_t m, std::size_t n);
  static SymCochain from_vector(std::size_t m, std::size_t n, Vector coeffs);

  std::size_t dim() const { return m_; }
  std::size_t degree() const { return n_; }
  std::size_t graded_degree() const { return n_ - 1; }
  const CochainShape& shape() const { return *shape_; }
  const Vector& coeffs() const { return coeffs_; }

  const Scalar& at(const std::vector<std::size_t>& args, std::size_t k) const;
  Scalar& at(const std::vector<std::size_t>& args, std::size_t k);
  /// Value on the basis tuple (e_{args[0]}, ..., e_{args[n-1]}).
  Vector value_on(const std::vector<std::size_t>& args) const;
  Vector value_at_index(std::size_t multiset_idx) const;

  bool is_zero() const { return jj::is_zero(coeffs_); }

  SymCochain operator+(const SymCochain& o) const;
  SymCochain operator-(const SymCochain& o) const;
  SymCochain operator-() const;
  SymCochain operator*(const Scalar& s) const;
  SymCochain& operator+=(const SymCochain& o);
  bool operator==(const SymCochain& o) const = default;

 private:
  void check_compatible(const SymCochain& o) const;

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  const CochainShape* shape_ = nullptr;
  Vector coeffs_;
};

inline SymCochain operator*(const Scalar& s, const SymCochain& c) { return c * s; }

/// e^{args}_k with 0-based indices.
SymCochain basis_cochain(std::size_t m, const std::vector<std::size_t>& args, std::size_t k);

Vector evaluate(const SymCochain& phi, const std::vector<Vector>& args);

SymCochain mult_cochain(const JJAlgebra& a);

/// d on S^1 and S^2 by the explicit coboundary formulas.
SymCochain differential(const JJAlgebra& a, const SymCochain& phi);

/// Sum over (p-1)-subsets S of argument positions of phi(x_S, psi(rest)).
SymCochain compose(const SymCochain& phi, const SymCochain& psi);
/// phi psi - (-1)^{(p-1)(q-1)} psi phi.
SymCochain bracket(const SymCochain& phi, const SymCochain& psi);
/// [phi_0, phi] on S^3.
SymCochain extended_differential(const JJAlgebra& a, const SymCochain& phi);

/// Matrix of d : S^n -> S^{n+1} (n = 1, 2) or of [phi_0, .] for n = 3;
/// column j is the image of the j-th basis cochain.
Matrix differential_matrix(const JJAlgebra& a, std::size_t n);

namespace serial {
Matrix differential_matrix(const JJAlgebra& a, std::size_t n);
}  // namespace serial

namespace parallel {
Matrix differential_matrix(const JJAlgebra& a, std::size_t n);
}  // namespace parallel

/// Text form "e^{1,3}_1 - 2e^{2,3}_2 + (1/2)e^{3,3}_3" with 1-based indices;
/// "0" for the zero cochain.
std::string to_string(const SymCochain& c);

/// Parses the notation above. Accepts e^{i,j}_k, e^{i,j}_{k}, e^{i}_k and
/// e^i_k, coefficients as integers, p/q or (p/q). Degree is inferred from
/// the first term; `degree` only matters for "0".
SymCochain parse_cochain(std::string_view text, std::size_t m, std::size_t degree = 2);

}  // namespace jj

#endif  // JJDEFORM_COCHAIN_HPP_
