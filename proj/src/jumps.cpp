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

#include "jjdeform/jumps.hpp"

#include "jjdeform/catalog.hpp"
#include "jjdeform/cochain.hpp"

namespace jj {
namespace {

struct EdgeSpec {
  const char* source;
  const char* target;
  const char* cocycle;
  const char* t0;
  // Columns: images of the target basis in source coordinates.
  std::vector<std::vector<const char*>> columns;
};

const std::vector<EdgeSpec>& specs(std::size_t dim) {
  static const std::vector<EdgeSpec> dim3 = {
      {"J_1_2+F", "J_1_3", "e^{3,3}_2", "4", {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1/2"}}},
  };
  static const std::vector<EdgeSpec> dim4 = {
      {"J_1_2+F2", "J_1_4", "e^{1,3}_4", "2",
       {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "2"}}},
      {"J_1_2+F2", "J_1_3+F", "e^{3,3}_2", "4",
       {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1/2", "0"}, {"0", "0", "0", "1"}}},
      {"J_1_4", "J_1_2^2", "e^{3,3}_2", "1",
       {{"1", "0", "1", "0"}, {"0", "2", "0", "2"}, {"1", "0", "-1", "0"}, {"0", "2", "0", "-2"}}},
      {"J_1_3+F", "J_1_2^2", "e^{1,1}_4", "1",
       {{"1", "0", "0", "0"}, {"0", "1", "0", "1"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}}},
      {"J_1_3+F", "J_2_4", "e^{4,4}_2", "-1",
       {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "1"}, {"0", "0", "1/2", "-1/2"}}},
  };
  static const std::vector<EdgeSpec> dim5 = {
      {"J_1_2+F3", "J_1_3+F2", "", "0", {}},
      {"J_1_2+F3", "J_1_4+F", "", "0", {}},
      {"J_1_4+F", "J_1_2^2+F", "", "0", {}},
      {"J_1_4+F", "J_6_5", "", "0", {}},
      {"J_1_3+F2", "J_1_2^2+F", "", "0", {}},
      {"J_1_3+F2", "J_2_4+F", "", "0", {}},
      {"J_1_2^2+F", "J_1_5", "", "0", {}},
      {"J_1_2^2+F", "J_2_5", "", "0", {}},
      {"J_1_2^2+F", "J_1_2+J_1_3", "", "0", {}},
      {"J_2_4+F", "J_1_2+J_1_3", "", "0", {}},
      {"J_2_4+F", "J_2_5", "", "0", {}},
      {"J_2_4+F", "J_3_5", "", "0", {}},
      {"J_2_4+F", "J_7_5", "", "0", {}},
      {"J_6_5", "J_5_5", "", "0", {}},
      {"J_6_5", "J_3_5", "", "0", {}},
      {"J_1_5", "J_8_5", "", "0", {}},
      {"J_2_5", "J_8_5", "", "0", {}},
      {"J_2_5", "J_5_5", "", "0", {}},
      {"J_1_2+J_1_3", "J_4_5", "", "0", {}},
      {"J_5_5", "J_4_5", "", "0", {}},
      {"J_3_5", "J_4_5", "", "0", {}},
      {"J_3_5", "J_8_5", "", "0", {}},
  };
  switch (dim) {
    case 3: return dim3;
    case 4: return dim4;
    case 5: return dim5;
    default: throw Error("jump_graph: dimension must be 3, 4 or 5");
  }
}

}  // namespace

std::string to_string(WitnessStatus s) {
  return s == WitnessStatus::verified ? "verified" : "asserted";
}

FormalDeformation1 edge_deformation(const JumpEdge& e) {
  if (e.cocycle.empty()) throw Error("edge has no bundled deformation");
  JJAlgebra base = catalog(e.source);
  return {base, {parse_cochain(e.cocycle, base.dim())}};
}

std::vector<JumpEdge> jump_graph(std::size_t dim) {
  std::vector<JumpEdge> out;
  for (const auto& s : specs(dim)) {
    JumpEdge e;
    e.source = s.source;
    e.target = s.target;
    e.cocycle = s.cocycle;
    e.t0 = parse_scalar(s.t0);
    if (s.columns.empty()) {
      e.note = "no rational witness bundled";
      out.push_back(std::move(e));
      continue;
    }
    std::vector<Vector> cols;
    for (const auto& c : s.columns) {
      Vector v;
      for (const char* x : c) v.push_back(parse_scalar(x));
      cols.push_back(std::move(v));
    }
    e.witness = LinearMap(Matrix::from_columns(cols, cols.size()));
    bool ok = verify_jump(edge_deformation(e), e.t0, *e.witness, catalog(e.target));
    e.status = ok ? WitnessStatus::verified : WitnessStatus::asserted;
    if (!ok) e.note = "bundled witness failed to verify";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace jj
