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

#ifndef JJDEFORM_DEFORMATION_HPP_
#define JJDEFORM_DEFORMATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/cohomology.hpp"

namespace jj {

/// x *_t y = x y + sum_n t^n phi_n(x, y), truncated at order N = terms.size().
struct FormalDeformation1 {
  JJAlgebra base;
  std::vector<SymCochain> terms;

  std::size_t order() const { return terms.size(); }
  /// phi_n for n >= 1, zero beyond the stored order.
  SymCochain term(std::size_t n) const;
  /// Same structure constants and the same stored terms; names are ignored.
  bool operator==(const FormalDeformation1& o) const {
    return base.same_constants(o.base) && terms == o.terms;
  }
};

/// psi_t = id + sum_i t^i psi_i with linear maps psi_i given as 1-cochains.
struct EquivalenceMap {
  std::vector<SymCochain> maps;
  std::size_t order() const { return maps.size(); }
};

struct OrderResidual {
  std::size_t order = 0;
  SymCochain residual;  // d phi_n + 1/2 sum_{i+j=n} [phi_i, phi_j]
};

/// Orders n <= order() where the deformation equation fails.
std::vector<OrderResidual> check_deformation(const FormalDeformation1& d);
/// Same, for all n <= max_order with phi_n = 0 beyond the stored terms.
std::vector<OrderResidual> check_deformation(const FormalDeformation1& d, std::size_t max_order);
/// The stored polynomial family is an honest deformation: the equation holds
/// through order 2N, so every higher order vanishes identically.
bool is_polynomial_deformation(const FormalDeformation1& d);

/// 1/2 sum_{i+j=n, i,j>0} [phi_i, phi_j] over the stored terms below n.
SymCochain obstruction(const FormalDeformation1& d, std::size_t n);

enum class Extendibility {
  real,                     // [phi, phi] = 0
  order2_then_obstructed,   // extends to order 2, no order-2 term reaches order 3
  order3_extendible,        // some order-2 term reaches order 3; not decided further
  obstructed_at_2,          // [phi, phi] is not a coboundary
};

std::string to_string(Extendibility e);

struct Classification {
  Extendibility kind = Extendibility::obstructed_at_2;
  /// chi with d chi = -1/2 [phi, phi] when the order-2 step succeeds.
  std::optional<SymCochain> order2_term;
};

Classification classify_infinitesimal(const Cohomology& c, const SymCochain& phi);
Classification classify_infinitesimal(const JJAlgebra& a, const SymCochain& phi);

/// Transports d along e so that e_t(x *_t y) = e_t(x) *'_t e_t(y) mod t^{N+1}.
FormalDeformation1 apply_equivalence(const FormalDeformation1& d, const EquivalenceMap& e);

/// The algebra x y + sum_n t0^n phi_n(x, y). Throws if it is not JJ.
JJAlgebra specialize(const FormalDeformation1& d, const Scalar& t0);

/// p maps the target basis into the specialized algebra.
bool verify_jump(const FormalDeformation1& d, const Scalar& t0, const LinearMap& p,
                 const JJAlgebra& target);

}  // namespace jj

#endif  // JJDEFORM_DEFORMATION_HPP_
