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


#include "jjdeform/versal.hpp"

#include <algorithm>

namespace jj {

std::string to_string(Truncation t) {
  return t == Truncation::m2_zero ? "m^2 = 0" : "m^3 in I";
}

std::string to_string(MasseyKind k) {
  switch (k) {
    case MasseyKind::undefined: return "undefined";
    case MasseyKind::trivial: return "trivial";
    case MasseyKind::nontrivial: return "nontrivial";
  }
  return "?";
}

std::vector<QuadMonomial> quadratic_monomials(std::size_t n) {
  std::vector<QuadMonomial> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

Exponent exponent_of(std::size_t n, const QuadMonomial& s) {
  Exponent e(n, 0);
  ++e[s.first];
  ++e[s.second];
  return e;
}

std::optional<QuadMonomial> quad_of(const Exponent& e) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned c = 0; c < e[i]; ++c) idx.push_back(i);
  if (idx.size() != 2) return std::nullopt;
  return QuadMonomial{idx[0], idx[1]};
}

void check_cochains(const JJAlgebra& a, const std::vector<SymCochain>& list, std::size_t degree,
                    const char* what) {
  for (const auto& c : list)
    if (c.dim() != a.dim() || c.degree() != degree) throw Error(std::string(what) + ": wrong cochain shape");
}

}  // namespace

std::vector<QuadMonomial> standard_monomials(const MultiParamDeformation& d) {
  std::vector<QuadMonomial> out;
  std::vector<QuadMonomial> leading;
  for (const auto& r : d.relations)
    if (!r.is_zero()) leading.push_back(*quad_of(r.terms().begin()->first));
  for (const auto& s : quadratic_monomials(d.n_params))
    if (std::find(leading.begin(), leading.end(), s) == leading.end()) out.push_back(s);
  return out;
}

MultiParamDeformation universal_infinitesimal(const JJAlgebra& a) {
  Cohomology c(a);
  MultiParamDeformation d;
  d.base = a;
  d.first_order = c.representatives();
  d.n_params = d.first_order.size();
  return d;
}

MultiParamDeformation universal_infinitesimal(const JJAlgebra& a, std::vector<SymCochain> reps) {
  check_cochains(a, reps, 2, "universal_infinitesimal");
  if (!verify_representatives(a, reps))
    throw Error("universal_infinitesimal: cochains do not lift a basis of H^2");
  MultiParamDeformation d;
  d.base = a;
  d.n_params = reps.size();
  d.first_order = std::move(reps);
  return d;
}

JJAlgebra infinitesimal_total_algebra(const JJAlgebra& a, const std::vector<SymCochain>& mu) {
  check_cochains(a, mu, 2, "infinitesimal_total_algebra");
  const std::size_t m = a.dim();
  const std::size_t n = mu.size();
  JJAlgebra t(a.name() + "[eta]", m * (1 + n));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      const Vector& p = a.basis_product(x, y);
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(p[k]) == 0) continue;
        t.add_product(x, y, k, p[k]);
        // e_x (h'_i e_y) = h'_i (e_x e_y), and symmetrically.
        for (std::size_t i = 0; i < n; ++i) {
          t.add_product(x, m + i * m + y, m + i * m + k, p[k]);
          if (x != y) t.add_product(y, m + i * m + x, m + i * m + k, p[k]);
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        Vector v = mu[i].value_on({x, y});
        for (std::size_t k = 0; k < m; ++k)
          if (sgn(v[k]) != 0) t.add_product(x, y, m + i * m + k, v[k]);
      }
    }
  }
  return t;
}

bool representative_independence_check(const JJAlgebra& a, const std::vector<SymCochain>& mu,
                                       const std::vector<SymCochain>& mu_prime) {
  if (mu.size() != mu_prime.size()) throw Error("representative_independence_check: size mismatch");
  check_cochains(a, mu, 2, "representative_independence_check");
  check_cochains(a, mu_prime, 2, "representative_independence_check");
  Cohomology c(a);
  const std::size_t m = a.dim();
  const std::size_t n = mu.size();
  Matrix rho = Matrix::identity(m * (1 + n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!c.is_cocycle(mu[i]) || !c.is_cocycle(mu_prime[i]))
      throw Error("representative_independence_check: not a cocycle");
    auto gamma = c.coboundary2_witness(mu[i] - mu_prime[i]);
    if (!gamma) throw Error("representative_independence_check: lifts are not cohomologous");
    for (std::size_t x = 0; x < m; ++x) {
      Vector g = gamma->value_on({x});
      for (std::size_t k = 0; k < m; ++k) rho(m + i * m + k, x) = g[k];
    }
  }
  return is_isomorphism(LinearMap(rho), infinitesimal_total_algebra(a, mu_prime),
                        infinitesimal_total_algebra(a, mu));
}

SymCochain monomial_bracket(const std::vector<SymCochain>& mu, const QuadMonomial& s) {
  SymCochain b = bracket(mu.at(s.first), mu.at(s.second));
  return s.first == s.second ? b : b * Scalar(2);
}

MultiParamDeformation second_order_extension(const JJAlgebra& a) {
  return second_order_extension(Cohomology(a));
}

MultiParamDeformation second_order_extension(const Cohomology& c) {
  return second_order_extension(c, c.representatives());
}

MultiParamDeformation second_order_extension(const Cohomology& c, std::vector<SymCochain> reps) {
  MultiParamDeformation d = universal_infinitesimal(c.algebra(), std::move(reps));
  d.truncation = Truncation::m3_in_ideal;
  const std::size_t n = d.n_params;
  const std::size_t m = c.algebra().dim();
  const auto mons = quadratic_monomials(n);
  const std::size_t count = mons.size();

  std::vector<SymCochain> total(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < count; ++s) total[s] = monomial_bracket(d.first_order, mons[s]);

  // Classes in S^3 / B^3; each quotient coordinate is one linear relation.
  Quotient q(c.b3(), Subspace::whole(cochain_space_dim(m, 3)));
  Matrix classes(q.dim(), count);
  for (std::size_t s = 0; s < count; ++s) {
    Vector v = q.reduce(total[s].coeffs());
    for (std::size_t r = 0; r < v.size(); ++r) classes(r, s) = v[r];
  }
  Subspace rel = Subspace::row_space(classes);
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    Polynomial p(n);
    for (std::size_t s = 0; s < count; ++s)
      if (sgn(rel.basis()(r, s)) != 0) p.add_term(exponent_of(n, mons[s]), rel.basis()(r, s));
    d.relations.push_back(std::move(p));
  }

  const auto& piv = rel.pivots();
  for (std::size_t s = 0; s < count; ++s) {
    if (std::find(piv.begin(), piv.end(), s) != piv.end()) continue;
    SymCochain combined = total[s];
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (sgn(rel.basis()(r, s)) != 0) combined += total[piv[r]] * (-rel.basis()(r, s));
    auto phi = c.coboundary3_witness(combined * Scalar(-1, 2));
    if (!phi) throw Error("second_order_extension: combined bracket is not a coboundary");
    d.corrections.emplace(mons[s], std::move(*phi));
  }
  return d;
}

bool verify_corrections(const MultiParamDeformation& d) {
  if (d.truncation == Truncation::m2_zero) return d.corrections.empty();
  const std::size_t n = d.n_params;
  for (const auto& [s, phi] : d.corrections) {
    // Rebuild the combined bracket from the relations.
    SymCochain combined = monomial_bracket(d.first_order, s);
    for (const auto& r : d.relations) {
      Scalar c = r.coefficient(exponent_of(n, s));
      if (sgn(c) == 0) continue;
      auto lead = *quad_of(r.terms().begin()->first);
      if (lead == s) return false;
      combined += monomial_bracket(d.first_order, lead) * (-c);
    }
    if (!(differential(d.base, phi) == combined * Scalar(-1, 2))) return false;
  }
  return true;
}

Polynomial reduce_mod_relations(const MultiParamDeformation& d, const Polynomial& p) {
  Polynomial out = p.truncated(d.truncation == Truncation::m2_zero ? 1 : 2);
  for (const auto& r : d.relations) {
    if (r.is_zero()) continue;
    const auto& [lead, one] = *r.terms().begin();
    Scalar c = out.coefficient(lead);
    if (sgn(c) != 0) out = out - r * (c / one);
  }
  return out;
}

std::vector<VersalEntry> versal_multiplication_table(const MultiParamDeformation& d) {
  const std::size_t m = d.base.dim();
  const std::size_t n = d.n_params;
  std::vector<VersalEntry> table;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      VersalEntry e{a, b, std::vector<Polynomial>(m, Polynomial(n))};
      const Vector& p = d.base.basis_product(a, b);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(p[k]) != 0) e.value[k].add_term(Exponent(n, 0), p[k]);
      for (std::size_t i = 0; i < n; ++i) {
        Vector v = d.first_order[i].value_on({a, b});
        Exponent ex(n, 0);
        ex[i] = 1;
        for (std::size_t k = 0; k < m; ++k)
          if (sgn(v[k]) != 0) e.value[k].add_term(ex, v[k]);
      }
      for (const auto& [s, phi] : d.corrections) {
        Vector v = phi.value_on({a, b});
        for (std::size_t k = 0; k < m; ++k)
          if (sgn(v[k]) != 0) e.value[k].add_term(exponent_of(n, s), v[k]);
      }
      for (auto& poly : e.value) poly = reduce_mod_relations(d, poly);
      table.push_back(std::move(e));
    }
  }
  return table;
}

std::string to_string(const VersalEntry& e) {
  std::string lhs = e.a == e.b ? "(e" + std::to_string(e.a + 1) + "^2)_v"
                               : "(e" + std::to_string(e.a + 1) + "e" + std::to_string(e.b + 1) + ")_v";
  struct Term {
    unsigned degree;
    Exponent ex;
    std::size_t k;
    Scalar c;
  };
  std::vector<Term> terms;
  for (std::size_t k = 0; k < e.value.size(); ++k)
    for (const auto& [ex, c] : e.value[k].terms()) {
      unsigned deg = 0;
      for (unsigned x : ex) deg += x;
      terms.push_back({deg, ex, k, c});
    }
  MonomialOrder order;
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.ex != y.ex) return order(x.ex, y.ex);
    return x.k < y.k;
  });
  std::string rhs;
  for (const auto& t : terms) {
    Scalar mag = abs(t.c);
    if (rhs.empty()) {
      if (t.c < 0) rhs += "-";
    } else {
      rhs += t.c < 0 ? " - " : " + ";
    }
    if (mag != 1) rhs += (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")") + "*";
    if (t.degree > 0) rhs += to_string(Polynomial::monomial(t.ex, 1)) + "*";
    rhs += "e" + std::to_string(t.k + 1);
  }
  return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

std::vector<std::string> format_table(const std::vector<VersalEntry>& table) {
  std::vector<std::string> out;
  for (const auto& e : table) {
    bool zero = std::all_of(e.value.begin(), e.value.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (!zero) out.push_back(to_string(e));
  }
  return out;
}

Massey3Result massey3(const Cohomology& c, const std::vector<SymCochain>& phi,
                      const std::map<QuadMonomial, SymCochain>& witnesses) {
  const JJAlgebra& a = c.algebra();
  if (phi.size() != 3) throw Error("massey3: expected three cochains");
  check_cochains(a, phi, 2, "massey3");
  for (const auto& p : phi)
    if (!c.is_cocycle(p)) throw Error("massey3: not a cocycle");

  Massey3Result out;
  std::map<QuadMonomial, SymCochain> brackets;
  for (const auto& s : quadratic_monomials(3)) {
    brackets[s] = bracket(phi[s.first], phi[s.second]);
    if (!c.b3().contains(brackets[s].coeffs())) out.offending.push_back(s);
  }
  if (!out.offending.empty()) return out;

  auto witness = [&](std::size_t i, std::size_t j) {
    QuadMonomial s{i, j};
    auto it = witnesses.find(s);
    if (it != witnesses.end()) {
      if (it->second.dim() != a.dim() || it->second.degree() != 2 ||
          !(differential(a, it->second) == brackets[s]))
        throw Error("massey3: witness fails d phi_ij = [phi_i, phi_j]");
      return it->second;
    }
    return *c.coboundary3_witness(brackets[s]);
  };
  SymCochain rho = bracket(witness(0, 1), phi[2]) + bracket(witness(1, 2), phi[0]) +
                   bracket(witness(0, 2), phi[1]);

  Subspace indeterminacy = c.b3();
  std::vector<Vector> extra;
  for (const auto& z : c.z2_basis())
    for (const auto& p : phi) extra.push_back(bracket(p, z).coeffs());
  indeterminacy = indeterminacy.sum(Subspace::span(extra, indeterminacy.ambient_dim()));
  out.kind = indeterminacy.contains(rho.coeffs()) ? MasseyKind::trivial : MasseyKind::nontrivial;
  out.representative = std::move(rho);
  return out;
}

Massey3Result massey3(const JJAlgebra& a, const std::vector<SymCochain>& phi,
                      const std::map<QuadMonomial, SymCochain>& witnesses) {
  return massey3(Cohomology(a), phi, witnesses);
}

InfinitesimalWithBase as_infinitesimal(const MultiParamDeformation& d) {
  return {d.base, d.n_params, d.first_order};
}

SymCochain alpha_cocycle(const InfinitesimalWithBase& lam, std::size_t i) {
  if (i >= lam.alpha.size()) throw Error("alpha_cocycle: index out of range");
  const SymCochain& a = lam.alpha[i];
  if (a.dim() != lam.base.dim() || a.degree() != 2 || !differential(lam.base, a).is_zero())
    throw Error("alpha_cocycle: alpha is not a cocycle");
  return a;
}

bool infinitesimal_equivalent(const InfinitesimalWithBase& lam, const InfinitesimalWithBase& other) {
  if (lam.r != other.r || lam.alpha.size() != lam.r || other.alpha.size() != other.r)
    throw Error("infinitesimal_equivalent: base dimensions differ");
  if (!lam.base.same_constants(other.base)) return false;
  Cohomology c(lam.base);
  for (std::size_t i = 0; i < lam.r; ++i) {
    SymCochain diff = alpha_cocycle(lam, i) - alpha_cocycle(other, i);
    if (!c.b2().contains(diff.coeffs())) return false;
  }
  return true;
}

InfinitesimalWithBase pushout_order1(const MultiParamDeformation& d, const Matrix& map) {
  if (d.truncation != Truncation::m2_zero) throw Error("pushout_order1: expected an order-one object");
  if (map.cols() != d.n_params) throw Error("pushout_order1: map has the wrong number of columns");
  InfinitesimalWithBase out{d.base, map.rows(), {}};
  for (std::size_t r = 0; r < map.rows(); ++r) {
    SymCochain acc(d.base.dim(), 2);
    for (std::size_t i = 0; i < d.n_params; ++i)
      if (sgn(map(r, i)) != 0) acc += d.first_order[i] * map(r, i);
    out.alpha.push_back(std::move(acc));
  }
  return out;
}

}  // namespace jj
