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

#ifndef JJDEFORM_JUMPS_HPP_
#define JJDEFORM_JUMPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/deformation.hpp"

namespace jj {

enum class WitnessStatus { verified, asserted };

std::string to_string(WitnessStatus s);

/// One arrow of a jump-deformation diagram. When a witness is bundled the
/// edge carries the one-parameter family source + t * cocycle, a rational
/// parameter value and a basis change from the target into the specialized
/// algebra.
struct JumpEdge {
  std::string source;
  std::string target;
  WitnessStatus status = WitnessStatus::asserted;
  std::string cocycle;  // e^{i,j}_k text, empty when asserted
  Scalar t0;
  std::optional<LinearMap> witness;
  std::string note;
};

/// Arrow sets for dimensions 3, 4 and 5. Bundled witnesses are checked
/// with verify_jump before an edge is marked verified.
std::vector<JumpEdge> jump_graph(std::size_t dim);

/// The one-term family source + t * cocycle of an edge with a witness.
FormalDeformation1 edge_deformation(const JumpEdge& e);

}  // namespace jj

#endif  // JJDEFORM_JUMPS_HPP_
