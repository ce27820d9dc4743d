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

#include "jjdeform/deformation.hpp"

#include <utility>

namespace jj {

SymCochain FormalDeformation1::term(std::size_t n) const {
  if (n >= 1 && n <= terms.size()) return terms[n - 1];
  return SymCochain(base.dim(), 2);
}

namespace {

SymCochain half_bracket_sum(const FormalDeformation1& d, std::size_t n) {
  SymCochain acc(d.base.dim(), 3);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = n - i;
    if (i > d.order() || j > d.order()) continue;
    acc += bracket(d.terms[i - 1], d.terms[j - 1]);
  }
  return acc * Scalar(1, 2);
}

void check_terms(const FormalDeformation1& d) {
  for (const auto& t : d.terms)
    if (t.dim() != d.base.dim() || t.degree() != 2)
      throw Error("deformation terms must be 2-cochains on the base algebra");
}

}  // namespace

std::vector<OrderResidual> check_deformation(const FormalDeformation1& d, std::size_t max_order) {
  check_terms(d);
  std::vector<OrderResidual> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    SymCochain r = half_bracket_sum(d, n);
    if (n <= d.order()) r += differential(d.base, d.terms[n - 1]);
    if (!r.is_zero()) out.push_back({n, std::move(r)});
  }
  return out;
}

std::vector<OrderResidual> check_deformation(const FormalDeformation1& d) {
  return check_deformation(d, d.order());
}

bool is_polynomial_deformation(const FormalDeformation1& d) {
  return check_deformation(d, 2 * d.order()).empty();
}

SymCochain obstruction(const FormalDeformation1& d, std::size_t n) {
  if (n == 0) throw Error("obstruction: order must be positive");
  check_terms(d);
  FormalDeformation1 lower{d.base, {}};
  for (std::size_t i = 1; i < n && i <= d.order(); ++i) lower.terms.push_back(d.terms[i - 1]);
  if (!check_deformation(lower, n - 1).empty())
    throw Error("obstruction: deformation equation fails below order " + std::to_string(n));
  return half_bracket_sum(lower, n);
}

std::string to_string(Extendibility e) {
  switch (e) {
    case Extendibility::real: return "real";
    case Extendibility::order2_then_obstructed: return "order2_then_obstructed";
    case Extendibility::order3_extendible: return "order3_extendible";
    case Extendibility::obstructed_at_2: return "obstructed_at_2";
  }
  return "unknown";
}

Classification classify_infinitesimal(const Cohomology& c, const SymCochain& phi) {
  if (!c.is_cocycle(phi)) throw Error("classify_infinitesimal: not a cocycle");
  SymCochain sq = bracket(phi, phi);
  if (sq.is_zero()) return {Extendibility::real, std::nullopt};
  auto chi = c.coboundary3_witness(sq * Scalar(-1, 2));
  if (!chi) return {Extendibility::obstructed_at_2, std::nullopt};

  // Order 3: phi_2 = chi + r with r in Z^2 must make [phi, phi_2] a
  // coboundary. Solve d(phi_3) + sum_i c_i [phi, z_i] = -[phi, chi].
  const Matrix& d2 = c.d2();
  std::vector<SymCochain> zs = c.z2_basis();
  Matrix a(d2.rows(), d2.cols() + zs.size());
  for (std::size_t r = 0; r < d2.rows(); ++r)
    for (std::size_t col = 0; col < d2.cols(); ++col) a(r, col) = d2(r, col);
  for (std::size_t i = 0; i < zs.size(); ++i)
    a.set_column(d2.cols() + i, bracket(phi, zs[i]).coeffs());
  auto sol = solve(a, (-bracket(phi, *chi)).coeffs());
  if (sol) return {Extendibility::order3_extendible, chi};
  return {Extendibility::order2_then_obstructed, chi};
}

Classification classify_infinitesimal(const JJAlgebra& a, const SymCochain& phi) {
  return classify_infinitesimal(Cohomology(a), phi);
}

namespace {

Matrix linear_matrix(const SymCochain& psi) {
  const std::size_t m = psi.dim();
  if (psi.degree() != 1) throw Error("equivalence maps must be 1-cochains");
  Matrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) out.set_column(j, psi.value_on({j}));
  return out;
}

// Coefficient list of a series of bilinear maps, each given on basis pairs.
using Bilinear = std::vector<Vector>;  // indexed by pair_index

Vector bilinear_eval(const Bilinear& mu, std::size_t m, const Vector& x, const Vector& y) {
  Vector out = zero_vector(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      axpy(out, x[i] * y[j], mu[pair_index(m, i, j)]);
    }
  }
  return out;
}

Bilinear bilinear_of(const SymCochain& phi) {
  const std::size_t m = phi.dim();
  Bilinear b(m * (m + 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) b[pair_index(m, i, j)] = phi.value_on({i, j});
  return b;
}

}  // namespace

FormalDeformation1 apply_equivalence(const FormalDeformation1& d, const EquivalenceMap& e) {
  check_terms(d);
  if (e.order() != d.order()) throw Error("apply_equivalence: orders differ");
  const std::size_t m = d.base.dim();
  const std::size_t n_max = d.order();
  std::vector<Matrix> psi{Matrix::identity(m)};
  for (const auto& p : e.maps) {
    if (p.dim() != m) throw Error("apply_equivalence: dimension mismatch");
    psi.push_back(linear_matrix(p));
  }
  // Inverse series: inv_0 = I, inv_n = -sum_{i=1..n} psi_i inv_{n-i}.
  std::vector<Matrix> inv{Matrix::identity(m)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    Matrix acc(m, m);
    for (std::size_t i = 1; i <= n; ++i) acc = acc - psi[i] * inv[n - i];
    inv.push_back(acc);
  }
  std::vector<Bilinear> mu{bilinear_of(mult_cochain(d.base))};
  for (const auto& t : d.terms) mu.push_back(bilinear_of(t));

  // mu'_n(x, y) = sum_{a+b+c+e=n} psi_a mu_b(inv_c x, inv_e y)
  FormalDeformation1 out{d.base, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    SymCochain phi(m, 2);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Vector v = zero_vector(m);
        for (std::size_t a = 0; a <= n; ++a)
          for (std::size_t b = 0; a + b <= n; ++b)
            for (std::size_t c = 0; a + b + c <= n; ++c) {
              std::size_t ee = n - a - b - c;
              Vector x = inv[c].column(i), y = inv[ee].column(j);
              v = add(v, psi[a] * bilinear_eval(mu[b], m, x, y));
            }
        for (std::size_t k = 0; k < m; ++k) phi.at({i, j}, k) = v[k];
      }
    out.terms.push_back(std::move(phi));
  }

  // Re-check psi_t(x *_t y) = psi_t(x) *'_t psi_t(y) through order N.
  std::vector<Bilinear> mu2{mu[0]};
  for (const auto& t : out.terms) mu2.push_back(bilinear_of(t));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t n = 0; n <= n_max; ++n) {
        Vector lhs = zero_vector(m), rhs = zero_vector(m);
        for (std::size_t a = 0; a <= n; ++a)
          lhs = add(lhs, psi[a] * mu[n - a][pair_index(m, i, j)]);
        for (std::size_t b = 0; b <= n; ++b)
          for (std::size_t c = 0; b + c <= n; ++c)
            rhs = add(rhs, bilinear_eval(mu2[b], m, psi[c].column(i), psi[n - b - c].column(j)));
        if (lhs != rhs) throw Error("apply_equivalence: transported family fails the relation");
      }
  return out;
}

JJAlgebra specialize(const FormalDeformation1& d, const Scalar& t0) {
  check_terms(d);
  const std::size_t m = d.base.dim();
  JJAlgebra out(d.base.name(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vector v = d.base.basis_product(i, j);
      Scalar tp = 1;
      for (const auto& t : d.terms) {
        tp *= t0;
        axpy(v, tp, t.value_on({i, j}));
      }
      out.set_product(i, j, v);
    }
  if (!verify_jj(out).empty()) throw Error("specialize: the specialized algebra violates the Jacobi identity");
  return out;
}

bool verify_jump(const FormalDeformation1& d, const Scalar& t0, const LinearMap& p,
                 const JJAlgebra& target) {
  if (t0 == 0) throw Error("verify_jump: parameter must be nonzero");
  return is_isomorphism(p, target, specialize(d, t0));
}

}  // namespace jj
