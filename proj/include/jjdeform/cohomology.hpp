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

#ifndef JJDEFORM_COHOMOLOGY_HPP_
#define JJDEFORM_COHOMOLOGY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/linalg.hpp"

namespace jj {

struct CohomologySummary {
  std::string name;
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t dim_h2 = 0;
  std::vector<SymCochain> representatives;
};

/// Everything degree-2 about one algebra, computed once at construction.
class Cohomology {
 public:
  explicit Cohomology(JJAlgebra a);

  const JJAlgebra& algebra() const { return a_; }
  const Matrix& d1() const { return d1_; }
  const Matrix& d2() const { return d2_; }
  const Subspace& z2() const { return z2_; }
  const Subspace& b2() const { return b2_; }
  const Subspace& b3() const { return d2_solver_.image(); }
  const Quotient& h2_quotient() const { return h2_; }

  std::size_t dim_h2() const { return h2_.dim(); }
  std::vector<SymCochain> representatives() const;
  std::vector<SymCochain> z2_basis() const;
  CohomologySummary summary() const;

  bool is_cocycle(const SymCochain& phi) const;
  /// psi with d psi = phi, zero off the pivot coordinates.
  std::optional<SymCochain> coboundary2_witness(const SymCochain& phi) const;
  /// chi with d chi = omega, zero off the pivot coordinates.
  std::optional<SymCochain> coboundary3_witness(const SymCochain& omega) const;
  /// Coordinates of the class of a cocycle in the representative basis.
  Vector h2_class(const SymCochain& phi) const;

 private:
  JJAlgebra a_;
  Matrix d1_;
  Matrix d2_;
  Subspace z2_;
  Subspace b2_;
  Solver d1_solver_;
  Solver d2_solver_;
  Quotient h2_;
};

Subspace z2(const JJAlgebra& a);
Subspace b2(const JJAlgebra& a);
Subspace b3(const JJAlgebra& a);
CohomologySummary h2(const JJAlgebra& a);

bool is_cocycle(const JJAlgebra& a, const SymCochain& phi);
std::optional<SymCochain> is_coboundary2(const JJAlgebra& a, const SymCochain& phi);
std::optional<SymCochain> is_coboundary3(const JJAlgebra& a, const SymCochain& omega);

/// True iff every cochain is a cocycle, their classes are independent and
/// their number equals dim H².
bool verify_representatives(const JJAlgebra& a, const std::vector<SymCochain>& list);
bool verify_representatives(const Cohomology& c, const std::vector<SymCochain>& list);

struct H2Row {
  std::string name;
  std::size_t dim = 0;
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t dim_h2 = 0;
  bool operator==(const H2Row& o) const = default;
};

/// One row per name, in input order.
std::vector<H2Row> h2_table(const std::vector<std::string>& names);

namespace serial {
std::vector<H2Row> h2_table(const std::vector<std::string>& names);
}  // namespace serial

namespace parallel {
std::vector<H2Row> h2_table(const std::vector<std::string>& names);
}  // namespace parallel

}  // namespace jj

#endif  // JJDEFORM_COHOMOLOGY_HPP_
