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

#ifndef JJDEFORM_CATALOG_HPP_
#define JJDEFORM_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "jjdeform/algebra.hpp"

namespace jj {

// Names.
//
// Flat identifiers: J_1_2, J_1_3, J_1_4, J_2_4, J_1_5 .. J_8_5, J_1_2^2.
// Summands are joined with '+', and trivial summands are written F, F2, F3
// or F^k. Subscript spellings such as "J_{1,2}+F^2" and the separators
// "(+)", "\oplus" and "⊕" are accepted as aliases. "F^m" alone is the
// m-dimensional zero algebra and "H_m" the Heisenberg algebra heisenberg(m).

/// Canonical flat spelling, e.g. "J_{1,2} \oplus F^2" -> "J_1_2+F2".
std::string canonical_name(std::string_view name);

/// Throws Error for names that do not parse.
JJAlgebra catalog(std::string_view name);

/// The 22 nontrivial algebras of dimension 2..5 in classification order.
const std::vector<std::string>& catalog_names();
std::vector<std::string> catalog_names(std::size_t dim);

/// Indecomposable entries of catalog_names().
bool is_indecomposable(std::string_view name);

/// Published representative cocycles spanning H², in e^{i,j}_k notation.
/// Empty for names without a published list.
std::vector<std::string> reference_representatives(std::string_view name);

/// Published cocycles among the above that define extendible deformations.
std::vector<std::string> reference_extendible(std::string_view name);

}  // namespace jj

#endif  // JJDEFORM_CATALOG_HPP_
