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


#ifndef JJDEFORM_IO_HPP_
#define JJDEFORM_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "jjdeform/algebra.hpp"
#include "jjdeform/bilinear.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/cohomology.hpp"
#include "jjdeform/deformation.hpp"
#include "jjdeform/jumps.hpp"
#include "jjdeform/versal.hpp"

namespace jj {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("-3/2"); indices in JSON are 1-based.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"name", "dim", "products": [{"i", "j", "coeffs"}]}, nonzero products only.
Json to_json(const JJAlgebra& a);
JJAlgebra algebra_from_json(const Json& j);

/// {"degree", "dim", "terms": [{"args", "k", "coeff"}]}.
Json to_json(const SymCochain& c);
SymCochain cochain_from_json(const Json& j);

/// {"base", "order", "terms": [cochain]}.
Json to_json(const FormalDeformation1& d);
FormalDeformation1 deformation_from_json(const Json& j);

/// {"kind", "matrix"}.
Json to_json(const BilinearForm& f);
BilinearForm form_from_json(const Json& j);

/// {"matrix"}; column j is the image of e_j.
Json to_json(const LinearMap& p);
LinearMap basis_change_from_json(const Json& j);

Json to_json(const MultiParamDeformation& d);
MultiParamDeformation versal_from_json(const Json& j);

Json graph_to_json(std::size_t dim, const std::vector<JumpEdge>& edges);
std::vector<JumpEdge> graph_from_json(const Json& j);
std::string graph_to_dot(std::size_t dim, const std::vector<JumpEdge>& edges);

Json to_json(const std::vector<H2Row>& rows);
std::vector<H2Row> h2_table_from_json(const Json& j);

Json to_json(const std::vector<SurveyRow>& rows, FormKind kind);
std::vector<SurveyRow> survey_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace jj

#endif  // JJDEFORM_IO_HPP_
