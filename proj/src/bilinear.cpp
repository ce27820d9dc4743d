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


#include "jjdeform/bilinear.hpp"

#include <map>

#include "jjdeform/catalog.hpp"

namespace jj {

std::string to_string(FormKind k) {
  return k == FormKind::symplectic ? "symplectic" : "pseudo_euclidean";
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "symplectic") return FormKind::symplectic;
  if (text == "pseudo" || text == "pseudo_euclidean" || text == "pseudo-euclidean")
    return FormKind::pseudo_euclidean;
  throw Error("unknown form kind: " + std::string(text));
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector my = matrix * y;
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * my[i];
  return s;
}

bool is_anti_derivation(const JJAlgebra& a, const LinearMap& d) {
  const std::size_t m = a.dim();
  if (d.matrix.rows() != m || d.matrix.cols() != m) throw Error("is_anti_derivation: dimension mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Vector ei = unit_vector(m, i), ej = unit_vector(m, j);
      Vector lhs = d(a.basis_product(i, j));
      axpy(lhs, 1, a.product(d(ei), ej));
      axpy(lhs, 1, a.product(ei, d(ej)));
      if (!is_zero(lhs)) return false;
    }
  }
  return true;
}

Subspace compatible_form_space(const JJAlgebra& a, FormKind kind) {
  const std::size_t m = a.dim();
  const std::size_t n = m * m;
  std::vector<Vector> rows;
  auto idx = [m](std::size_t r, std::size_t c) { return r * m + c; };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = r; c < m; ++c) {
      Vector row = zero_vector(n);
      if (kind == FormKind::symplectic) {
        row[idx(r, c)] += 1;
        row[idx(c, r)] += 1;
      } else {
        if (r == c) continue;
        row[idx(r, c)] = 1;
        row[idx(c, r)] = -1;
      }
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        Vector row = zero_vector(n);
        const Vector& ij = a.basis_product(i, j);
        const Vector& jk = a.basis_product(j, k);
        const Vector& ki = a.basis_product(k, i);
        for (std::size_t l = 0; l < m; ++l) {
          if (kind == FormKind::symplectic) {
            row[idx(l, k)] += ij[l];
            row[idx(l, i)] += jk[l];
            row[idx(l, j)] += ki[l];
          } else {
            row[idx(l, k)] += ij[l];
            row[idx(i, l)] -= jk[l];
          }
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace::whole(n);
  return kernel_basis(Matrix::from_rows(rows, n));
}

namespace {

std::size_t square_root(std::size_t n) {
  std::size_t m = 0;
  while ((m + 1) * (m + 1) <= n) ++m;
  if (m * m != n) throw Error("form space: ambient dimension is not a square");
  return m;
}

// Laplace expansion over column subsets, memoized by the set of used columns.
Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& g, std::size_t nvars) {
  const std::size_t m = g.size();
  std::map<unsigned, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned used) -> Polynomial {
    if (row == m) return Polynomial::constant(nvars, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial acc(nvars);
    std::size_t position = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (used & (1u << c)) continue;
      if (!g[row][c].is_zero()) {
        Polynomial term = g[row][c] * self(self, row + 1, used | (1u << c));
        acc += position % 2 == 0 ? term : term * Scalar(-1);
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u);
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Scalar& value) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    Scalar v = c;
    for (unsigned k = 0; k < e[var]; ++k) v *= value;
    f[var] = 0;
    out.add_term(f, v);
  }
  return out;
}

Matrix unflatten(const Vector& v, std::size_t m) {
  Matrix out(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = v[r * m + c];
  return out;
}

}  // namespace

NondegenerateSearch find_nondegenerate(const Subspace& space, FormKind kind) {
  const std::size_t m = square_root(space.ambient_dim());
  const std::size_t k = space.dim();
  NondegenerateSearch out{std::nullopt, Polynomial(k)};
  if (m == 0) {
    out.determinant = Polynomial::constant(k, 1);
    out.form = BilinearForm{kind, Matrix(0, 0)};
    return out;
  }
  std::vector<std::vector<Polynomial>> g(m, std::vector<Polynomial>(m, Polynomial(k)));
  for (std::size_t i = 0; i < k; ++i) {
    Exponent e(k, 0);
    e[i] = 1;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& x = space.basis()(i, r * m + c);
        if (sgn(x) != 0) g[r][c].add_term(e, x);
      }
  }
  out.determinant = symbolic_determinant(g, k);
  if (out.determinant.is_zero()) return out;

  // Fix one coordinate at a time to the first small integer that keeps the
  // determinant a nonzero polynomial.
  Polynomial p = out.determinant;
  Vector point = zero_vector(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (long step = 0;; ++step) {
      // 0, 1, -1, 2, -2, ...
      Scalar v((step + 1) / 2);
      if (step % 2 == 0) v = -v;
      Polynomial q = substitute(p, i, v);
      if (!q.is_zero()) {
        p = std::move(q);
        point[i] = v;
        break;
      }
    }
  }
  Vector flat = zero_vector(m * m);
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(point[i]) != 0) axpy(flat, point[i], space.basis_vector(i));
  out.form = BilinearForm{kind, unflatten(flat, m)};
  return out;
}

bool verify_form(const JJAlgebra& a, const BilinearForm& f) {
  const std::size_t m = a.dim();
  const Matrix& w = f.matrix;
  if (w.rows() != m || w.cols() != m) return false;
  Matrix t = w.transpose();
  if (f.kind == FormKind::symplectic ? !(t == w.scaled(-1)) : !(t == w)) return false;
  if (m > 0 && sgn(determinant(w)) == 0) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector ei = unit_vector(m, i), ej = unit_vector(m, j), ek = unit_vector(m, k);
        Scalar s;
        if (f.kind == FormKind::symplectic)
          s = f(a.basis_product(i, j), ek) + f(a.basis_product(j, k), ei) + f(a.basis_product(k, i), ej);
        else
          s = f(a.basis_product(i, j), ek) - f(ei, a.basis_product(j, k));
        if (sgn(s) != 0) return false;
      }
  return true;
}

LinearMap adjoint_map(const BilinearForm& f, const LinearMap& g) {
  const std::size_t m = f.matrix.rows();
  if (g.matrix.rows() != m || g.matrix.cols() != m) throw Error("adjoint_map: dimension mismatch");
  if (m == 0) return g;
  auto inv = inverse(f.matrix);
  if (!inv) throw Error("adjoint_map: degenerate form");
  LinearMap star(*inv * g.matrix.transpose() * f.matrix);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (f(g(unit_vector(m, i)), unit_vector(m, j)) != f(unit_vector(m, i), star(unit_vector(m, j))))
        throw Error("adjoint_map: defining identity fails");
  return star;
}

bool is_special_admissible(const JJAlgebra& a, const BilinearForm& omega,
                           const SpecialAdmissiblePair& pair) {
  const std::size_t m = a.dim();
  const Matrix& d = pair.d_map.matrix;
  if (d.rows() != m || d.cols() != m || pair.a0.size() != m) return false;
  if (omega.matrix.rows() != m || omega.matrix.cols() != m) return false;
  if (!is_anti_derivation(a, pair.d_map)) return false;
  if (!is_zero(d * pair.a0)) return false;
  if (!(d * d == left_mult(a, pair.a0).matrix.scaled(Scalar(-1, 2)))) return false;
  for (std::size_t x = 0; x < m; ++x)
    if (sgn(omega(pair.a0, d.column(x))) != 0) return false;
  return true;
}

std::pair<JJAlgebra, BilinearForm> double_extension(const JJAlgebra& a, const BilinearForm& omega,
                                                    const SpecialAdmissiblePair& pair) {
  if (!is_special_admissible(a, omega, pair))
    throw Error("double_extension: not a special admissible pair");
  const std::size_t m = a.dim();
  const std::size_t e = 0, estar = m + 1;
  JJAlgebra out("DE(" + a.name() + ")", m + 2);
  LinearMap dstar = adjoint_map(omega, pair.d_map);
  Matrix skew = pair.d_map.matrix - dstar.matrix;

  for (std::size_t k = 0; k < m; ++k)
    if (sgn(pair.a0[k]) != 0) out.add_product(e, e, 1 + k, pair.a0[k]);
  for (std::size_t x = 0; x < m; ++x) {
    Vector ex = unit_vector(m, x);
    Vector dx = pair.d_map(ex);
    for (std::size_t k = 0; k < m; ++k)
      if (sgn(dx[k]) != 0) out.add_product(e, 1 + x, 1 + k, dx[k]);
    Scalar half = omega(pair.a0, ex) / 2;
    if (sgn(half) != 0) out.add_product(e, 1 + x, estar, half);
    for (std::size_t y = x; y < m; ++y) {
      const Vector& p = a.basis_product(x, y);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(p[k]) != 0) out.add_product(1 + x, 1 + y, 1 + k, p[k]);
      Scalar c = omega(skew * ex, unit_vector(m, y));
      if (sgn(c) != 0) out.add_product(1 + x, 1 + y, estar, c);
    }
  }

  Matrix w(m + 2, m + 2);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) w(1 + r, 1 + c) = omega.matrix(r, c);
  w(e, estar) = 1;
  w(estar, e) = -1;
  return {std::move(out), BilinearForm{FormKind::symplectic, std::move(w)}};
}

BilinearForm pull_back(const BilinearForm& f, const LinearMap& p) {
  return BilinearForm{f.kind, p.matrix.transpose() * f.matrix * p.matrix};
}

bool i_isometry_check(const LinearMap& p, const JJAlgebra& a, const BilinearForm& f,
                      const JJAlgebra& b, const BilinearForm& g) {
  if (a.dim() != b.dim() || p.dim() != a.dim() || f.matrix.rows() != a.dim() ||
      g.matrix.rows() != b.dim())
    throw Error("i_isometry_check: dimension mismatch");
  if (!is_isomorphism(p, a, b)) return false;
  return pull_back(g, p).matrix == f.matrix;
}

std::vector<SurveyRow> structure_survey(const std::vector<JJAlgebra>& algebras, FormKind kind) {
  std::vector<SurveyRow> rows(algebras.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    Subspace space = compatible_form_space(algebras[i], kind);
    NondegenerateSearch s = find_nondegenerate(space, kind);
    SurveyRow& row = rows[i];
    row.name = algebras[i].name();
    row.space_dim = space.dim();
    row.exists = s.form.has_value();
    row.witness = s.form;
    row.certificate = to_string(s.determinant, "x");
  }
  return rows;
}

std::vector<SurveyRow> structure_survey(const std::vector<std::string>& names, FormKind kind) {
  std::vector<JJAlgebra> algebras;
  for (const auto& n : names) algebras.push_back(catalog(n));
  return structure_survey(algebras, kind);
}

}  // namespace jj
