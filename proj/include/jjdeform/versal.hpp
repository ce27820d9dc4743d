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


#ifndef JJDEFORM_VERSAL_HPP_
#define JJDEFORM_VERSAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jjdeform/algebra.hpp"
#include "jjdeform/cochain.hpp"
#include "jjdeform/cohomology.hpp"
#include "jjdeform/polynomial.hpp"

namespace jj {

enum class Truncation { m2_zero, m3_in_ideal };

std::string to_string(Truncation t);

/// Monomial t_i t_j with i <= j (0-based).
using QuadMonomial = std::pair<std::size_t, std::size_t>;

/// mu_t = mu_0 + sum t_i mu_i + sum_{i<=j} t_i t_j phi_ij over
/// F[[t_1..t_n]] / (relations + m^3), or over F + m/m^2 when truncated at m^2.
struct MultiParamDeformation {
  JJAlgebra base;
  std::size_t n_params = 0;
  std::vector<SymCochain> first_order;
  /// Present only for monomials that survive the relations (see
  /// standard_monomials); each solves d phi = -1/2 of its combined bracket.
  std::map<QuadMonomial, SymCochain> corrections;
  /// Homogeneous quadratics, rows of a reduced echelon form over the
  /// monomials t1^2, t1*t2, ..., tn^2.
  std::vector<Polynomial> relations;
  Truncation truncation = Truncation::m2_zero;
};

/// All monomials t_i t_j (i <= j) in the order t1^2, t1*t2, ..., tn^2.
std::vector<QuadMonomial> quadratic_monomials(std::size_t n);
/// Quadratic monomials that are not leading terms of a relation.
std::vector<QuadMonomial> standard_monomials(const MultiParamDeformation& d);

MultiParamDeformation universal_infinitesimal(const JJAlgebra& a);
/// Uses the given lifts; throws unless they form a basis of H².
MultiParamDeformation universal_infinitesimal(const JJAlgebra& a, std::vector<SymCochain> reps);

/// The algebra J + H' (x) J of dimension m (1 + n) carrying the order-one
/// multiplication built from mu. Basis: e_a first, then h'_i (x) e_k at
/// m + i m + k.
JJAlgebra infinitesimal_total_algebra(const JJAlgebra& a, const std::vector<SymCochain>& mu);

/// Builds rho(x) = x + sum h'_i (x) gamma_i(x) from d gamma_i = mu_i - mu'_i and
/// checks that it is an isomorphism from the mu' algebra onto the mu algebra.
/// Throws if some mu'_i - mu_i is not a coboundary.
bool representative_independence_check(const JJAlgebra& a, const std::vector<SymCochain>& mu,
                                       const std::vector<SymCochain>& mu_prime);

/// Total bracket B_ij of the monomial t_i t_j: [mu_i, mu_i] on the diagonal
/// and 2 [mu_i, mu_j] otherwise.
SymCochain monomial_bracket(const std::vector<SymCochain>& mu, const QuadMonomial& s);

MultiParamDeformation second_order_extension(const JJAlgebra& a);
MultiParamDeformation second_order_extension(const Cohomology& c);
MultiParamDeformation second_order_extension(const Cohomology& c, std::vector<SymCochain> reps);

/// Re-substitutes every correction into its coboundary equation.
bool verify_corrections(const MultiParamDeformation& d);

/// Truncates at degree 2 and rewrites leading monomials of the relations.
Polynomial reduce_mod_relations(const MultiParamDeformation& d, const Polynomial& p);

/// Coefficient polynomials of (e_a e_b)_v for a <= b, one per basis vector.
struct VersalEntry {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Polynomial> value;
};

std::vector<VersalEntry> versal_multiplication_table(const MultiParamDeformation& d);

/// "(e2e3)_v = -2*t1*e2 - 2*t2^2*e3"; "(e3^2)_v = ..." on the diagonal.
std::string to_string(const VersalEntry& e);
/// One line per nonzero entry.
std::vector<std::string> format_table(const std::vector<VersalEntry>& table);

enum class MasseyKind { undefined, trivial, nontrivial };

std::string to_string(MasseyKind k);

struct Massey3Result {
  MasseyKind kind = MasseyKind::undefined;
  /// Pairs (i <= j) of the triple whose bracket is not a coboundary.
  std::vector<QuadMonomial> offending;
  /// [phi_12, phi_3] + [phi_23, phi_1] + [phi_13, phi_2] once defined.
  std::optional<SymCochain> representative;
};

/// Witnesses are keyed by pairs of positions in the triple and must satisfy
/// d phi_ij = [phi_i, phi_j]; missing ones are solved for.
Massey3Result massey3(const Cohomology& c, const std::vector<SymCochain>& phi,
                      const std::map<QuadMonomial, SymCochain>& witnesses = {});
Massey3Result massey3(const JJAlgebra& a, const std::vector<SymCochain>& phi,
                      const std::map<QuadMonomial, SymCochain>& witnesses = {});

/// Order-one deformation over a base whose maximal ideal has dimension r:
/// x y + sum_i m'_i (x) alpha_i(x, y).
struct InfinitesimalWithBase {
  JJAlgebra base;
  std::size_t r = 0;
  std::vector<SymCochain> alpha;
};

InfinitesimalWithBase as_infinitesimal(const MultiParamDeformation& d);

/// alpha_{lambda, m'_i}; throws if it is not a cocycle.
SymCochain alpha_cocycle(const InfinitesimalWithBase& lam, std::size_t i);
bool infinitesimal_equivalent(const InfinitesimalWithBase& lam, const InfinitesimalWithBase& other);

/// Push-out along the linear map H' -> m_B given as an r x n matrix.
InfinitesimalWithBase pushout_order1(const MultiParamDeformation& d, const Matrix& map);

}  // namespace jj

#endif  // JJDEFORM_VERSAL_HPP_
