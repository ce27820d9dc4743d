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


#ifndef JJDEFORM_BILINEAR_HPP_
#define JJDEFORM_BILINEAR_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/linalg.hpp"
#include "jjdeform/polynomial.hpp"

namespace jj {

enum class FormKind { symplectic, pseudo_euclidean };

std::string to_string(FormKind k);
/// Accepts "symplectic", "pseudo" and "pseudo_euclidean".
FormKind parse_form_kind(std::string_view text);

/// f(x, y) = x^T M y.
struct BilinearForm {
  FormKind kind = FormKind::symplectic;
  Matrix matrix;

  Scalar operator()(const Vector& x, const Vector& y) const;
  bool operator==(const BilinearForm& o) const = default;
};

/// D(x y) = -D(x) y - x D(y) on basis pairs.
bool is_anti_derivation(const JJAlgebra& a, const LinearMap& d);

/// Solutions of the (skew)symmetry and compatibility equations inside the
/// m*m matrices, flattened row-major. Nondegeneracy is not imposed.
Subspace compatible_form_space(const JJAlgebra& a, FormKind kind);

struct NondegenerateSearch {
  std::optional<BilinearForm> form;
  /// det(sum_i x_i B_i) over the basis B_i of the space; identically zero
  /// exactly when no element is nondegenerate.
  Polynomial determinant;
};

NondegenerateSearch find_nondegenerate(const Subspace& space, FormKind kind);

/// Symmetry type, nondegeneracy and the compatibility identity.
bool verify_form(const JJAlgebra& a, const BilinearForm& f);

/// g* with f(g x, y) = f(x, g* y). Throws for degenerate f.
LinearMap adjoint_map(const BilinearForm& f, const LinearMap& g);

struct SpecialAdmissiblePair {
  LinearMap d_map;
  Vector a0;
};

bool is_special_admissible(const JJAlgebra& a, const BilinearForm& omega,
                           const SpecialAdmissiblePair& pair);

/// Basis e, e_1..e_m, e* in that order. Throws unless the pair is special
/// admissible.
std::pair<JJAlgebra, BilinearForm> double_extension(const JJAlgebra& a, const BilinearForm& omega,
                                                    const SpecialAdmissiblePair& pair);

/// p : a -> b is an algebra isomorphism with g(p x, p y) = f(x, y).
bool i_isometry_check(const LinearMap& p, const JJAlgebra& a, const BilinearForm& f,
                      const JJAlgebra& b, const BilinearForm& g);

/// p^T M p: the form on the source of p pulled back from its target.
BilinearForm pull_back(const BilinearForm& f, const LinearMap& p);

struct SurveyRow {
  std::string name;
  bool exists = false;
  std::size_t space_dim = 0;
  std::optional<BilinearForm> witness;
  /// Generic determinant, "0" when the space carries no nondegenerate form.
  std::string certificate;
};

std::vector<SurveyRow> structure_survey(const std::vector<std::string>& names, FormKind kind);
/// Same survey for explicitly given algebras.
std::vector<SurveyRow> structure_survey(const std::vector<JJAlgebra>& algebras, FormKind kind);

}  // namespace jj

#endif  // JJDEFORM_BILINEAR_HPP_
