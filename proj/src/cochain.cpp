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

#include "jjdeform/cochain.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace jj {
namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void enumerate(std::size_t m, std::size_t n, Multiset& cur, std::vector<Multiset>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back();
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    enumerate(m, n, cur, out);
    cur.pop_back();
  }
}

// Visits every k-subset of {0..r-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t r, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == r - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CochainShape::CochainShape(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (n == 0 || n > kMaxCochainDegree + 1) throw Error("unsupported cochain degree");
  Multiset cur;
  enumerate(m, n, cur, multisets_);
  lookup_.assign(ipow(m, n), 0);
  for (std::size_t idx = 0; idx < multisets_.size(); ++idx) {
    std::size_t code = 0;
    for (auto v : multisets_[idx]) code = code * m + v;
    lookup_[code] = idx;
  }
}

std::size_t CochainShape::index_of(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != n_) throw Error("cochain arity mismatch");
  std::size_t small[kMaxCochainDegree + 1];
  std::copy(tuple.begin(), tuple.end(), small);
  std::sort(small, small + n_);
  std::size_t code = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (small[i] >= m_) throw Error("cochain index out of range");
    code = code * m_ + small[i];
  }
  return lookup_[code];
}

const CochainShape& cochain_shape(std::size_t m, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<CochainShape>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<CochainShape>(m, n);
  return *slot;
}

std::size_t cochain_space_dim(std::size_t m, std::size_t n) {
  return m * binomial(m + n - 1, n);
}

SymCochain::SymCochain(std::size_t m, std::size_t n)
    : m_(m), n_(n), coeffs_(cochain_space_dim(m, n), Scalar(0)) {
  if (n == 0 || n > kMaxCochainDegree) throw Error("unsupported cochain degree");
  shape_ = &cochain_shape(m, n);
}

SymCochain SymCochain::from_vector(std::size_t m, std::size_t n, Vector coeffs) {
  SymCochain c(m, n);
  if (coeffs.size() != c.coeffs_.size()) throw Error("cochain coordinate length mismatch");
  c.coeffs_ = std::move(coeffs);
  return c;
}

const Scalar& SymCochain::at(const std::vector<std::size_t>& args, std::size_t k) const {
  if (k >= m_) throw Error("cochain target index out of range");
  return coeffs_[shape().index_of(args) * m_ + k];
}

Scalar& SymCochain::at(const std::vector<std::size_t>& args, std::size_t k) {
  if (k >= m_) throw Error("cochain target index out of range");
  return coeffs_[shape().index_of(args) * m_ + k];
}

Vector SymCochain::value_at_index(std::size_t idx) const {
  return Vector(coeffs_.begin() + static_cast<long>(idx * m_),
                coeffs_.begin() + static_cast<long>((idx + 1) * m_));
}

Vector SymCochain::value_on(const std::vector<std::size_t>& args) const {
  return value_at_index(shape().index_of(args));
}

void SymCochain::check_compatible(const SymCochain& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw Error("cochain shape mismatch");
}

SymCochain SymCochain::operator+(const SymCochain& o) const {
  check_compatible(o);
  return from_vector(m_, n_, add(coeffs_, o.coeffs_));
}

SymCochain SymCochain::operator-(const SymCochain& o) const {
  check_compatible(o);
  return from_vector(m_, n_, sub(coeffs_, o.coeffs_));
}

SymCochain SymCochain::operator-() const { return from_vector(m_, n_, scale(coeffs_, -1)); }

SymCochain SymCochain::operator*(const Scalar& s) const {
  return from_vector(m_, n_, scale(coeffs_, s));
}

SymCochain& SymCochain::operator+=(const SymCochain& o) {
  check_compatible(o);
  axpy(coeffs_, 1, o.coeffs_);
  return *this;
}

SymCochain basis_cochain(std::size_t m, const std::vector<std::size_t>& args, std::size_t k) {
  SymCochain c(m, args.size());
  c.at(args, k) = 1;
  return c;
}

Vector evaluate(const SymCochain& phi, const std::vector<Vector>& args) {
  const std::size_t m = phi.dim();
  const std::size_t n = phi.degree();
  if (args.size() != n) throw Error("evaluate: arity mismatch");
  for (const auto& v : args)
    if (v.size() != m) throw Error("evaluate: dimension mismatch");
  Vector out = zero_vector(m);
  std::vector<std::size_t> tuple(n);
  // Depth-first over the nonzero coordinates of each argument.
  auto rec = [&](auto&& self, std::size_t pos, const Scalar& coef) -> void {
    if (pos == n) {
      axpy(out, coef, phi.value_on(tuple));
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (args[pos][i] == 0) continue;
      tuple[pos] = i;
      self(self, pos + 1, coef * args[pos][i]);
    }
  };
  rec(rec, 0, Scalar(1));
  return out;
}

SymCochain mult_cochain(const JJAlgebra& a) {
  const std::size_t m = a.dim();
  SymCochain c(m, 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Vector& v = a.basis_product(i, j);
      for (std::size_t k = 0; k < m; ++k) c.at({i, j}, k) = v[k];
    }
  return c;
}

SymCochain differential(const JJAlgebra& a, const SymCochain& phi) {
  const std::size_t m = a.dim();
  if (phi.dim() != m) throw Error("differential: dimension mismatch");
  if (phi.degree() == 1) {
    SymCochain out(m, 2);
    for (const auto& t : out.shape().multisets()) {
      std::size_t x = t[0], y = t[1];
      Vector v = evaluate(phi, {a.basis_product(x, y)});
      v = sub(v, a.product(unit_vector(m, x), phi.value_on({y})));
      v = sub(v, a.product(unit_vector(m, y), phi.value_on({x})));
      for (std::size_t k = 0; k < m; ++k) out.at(t, k) = v[k];
    }
    return out;
  }
  if (phi.degree() == 2) {
    SymCochain out(m, 3);
    for (const auto& t : out.shape().multisets()) {
      std::size_t x = t[0], y = t[1], z = t[2];
      Vector ex = unit_vector(m, x), ey = unit_vector(m, y), ez = unit_vector(m, z);
      Vector v = evaluate(phi, {ex, a.basis_product(y, z)});
      v = add(v, evaluate(phi, {ey, a.basis_product(z, x)}));
      v = add(v, evaluate(phi, {ez, a.basis_product(x, y)}));
      v = add(v, a.product(ex, phi.value_on({y, z})));
      v = add(v, a.product(ey, phi.value_on({z, x})));
      v = add(v, a.product(ez, phi.value_on({x, y})));
      for (std::size_t k = 0; k < m; ++k) out.at(t, k) = v[k];
    }
    return out;
  }
  throw Error("differential: degree must be 1 or 2 (use extended_differential on S^3)");
}

SymCochain compose(const SymCochain& phi, const SymCochain& psi) {
  const std::size_t m = phi.dim();
  if (psi.dim() != m) throw Error("compose: dimension mismatch");
  const std::size_t p = phi.degree(), q = psi.degree();
  const std::size_t r = p + q - 1;
  if (r > kMaxCochainDegree) throw Error("compose: resulting degree exceeds 4");
  SymCochain out(m, r);
  const auto& shape = out.shape();
  std::vector<std::size_t> rest(q), front(p);
  for (std::size_t ti = 0; ti < shape.multiset_count(); ++ti) {
    const Multiset& t = shape.multiset(ti);
    Vector acc = zero_vector(m);
    for_each_subset(r, p - 1, [&](const std::vector<std::size_t>& s) {
      std::size_t ri = 0, fi = 0, si = 0;
      for (std::size_t pos = 0; pos < r; ++pos) {
        if (si < s.size() && s[si] == pos) {
          front[fi++] = t[pos];
          ++si;
        } else {
          rest[ri++] = t[pos];
        }
      }
      Vector inner = psi.value_on(rest);
      for (std::size_t k = 0; k < m; ++k) {
        if (inner[k] == 0) continue;
        front[p - 1] = k;
        axpy(acc, inner[k], phi.value_on(front));
      }
    });
    for (std::size_t k = 0; k < m; ++k) out.at(t, k) = acc[k];
  }
  return out;
}

SymCochain bracket(const SymCochain& phi, const SymCochain& psi) {
  const std::size_t p = phi.degree(), q = psi.degree();
  bool odd = ((p - 1) * (q - 1)) % 2 == 1;
  // sign (-1)^{(p-1)(q-1)}; the bracket subtracts sign * psi phi.
  SymCochain pq = compose(phi, psi);
  SymCochain qp = compose(psi, phi);
  return odd ? pq + qp : pq - qp;
}

SymCochain extended_differential(const JJAlgebra& a, const SymCochain& phi) {
  if (phi.degree() != 3) throw Error("extended_differential: degree must be 3");
  return bracket(mult_cochain(a), phi);
}

namespace {

SymCochain apply_d(const JJAlgebra& a, const SymCochain& phi) {
  return phi.degree() == 3 ? extended_differential(a, phi) : differential(a, phi);
}

template <bool Parallel>
Matrix differential_matrix_impl(const JJAlgebra& a, std::size_t n) {
  if (n < 1 || n > 3) throw Error("differential_matrix: degree must be 1, 2 or 3");
  const std::size_t m = a.dim();
  const std::size_t cols = cochain_space_dim(m, n);
  const std::size_t rows = cochain_space_dim(m, n + 1);
  const auto& shape = cochain_shape(m, n);
  (void)cochain_shape(m, n + 1);
  Matrix d(rows, cols);
  const long long total = static_cast<long long>(cols);
  auto column = [&](long long j) {
    auto uj = static_cast<std::size_t>(j);
    SymCochain e = basis_cochain(m, shape.multiset(uj / m), uj % m);
    d.set_column(uj, apply_d(a, e).coeffs());
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long j = 0; j < total; ++j) column(j);
  } else {
    for (long long j = 0; j < total; ++j) column(j);
  }
  return d;
}

}  // namespace

namespace serial {
Matrix differential_matrix(const JJAlgebra& a, std::size_t n) {
  return differential_matrix_impl<false>(a, n);
}
}  // namespace serial

namespace parallel {
Matrix differential_matrix(const JJAlgebra& a, std::size_t n) {
  return differential_matrix_impl<true>(a, n);
}
}  // namespace parallel

Matrix differential_matrix(const JJAlgebra& a, std::size_t n) {
  return parallel::differential_matrix(a, n);
}

std::string to_string(const SymCochain& c) {
  std::string out;
  const std::size_t m = c.dim();
  const auto& shape = c.shape();
  for (std::size_t ti = 0; ti < shape.multiset_count(); ++ti) {
    for (std::size_t k = 0; k < m; ++k) {
      const Scalar& v = c.coeffs()[ti * m + k];
      if (v == 0) continue;
      Scalar mag = abs(v);
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
      }
      out += "e^{";
      const Multiset& t = shape.multiset(ti);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i] + 1);
      }
      out += "}_" + std::to_string(k + 1);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class CochainParser {
 public:
  explicit CochainParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    // Unicode minus sign.
    std::string fixed;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (s_.compare(i, 3, "\xE2\x88\x92") == 0) {
        fixed += '-';
        i += 2;
      } else {
        fixed += s_[i];
      }
    }
    s_ = fixed;
  }

  struct Term {
    Scalar coef;
    std::vector<std::size_t> args;
    std::size_t k;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    if (s_ == "0") return terms;
    if (s_.empty()) fail("empty cochain expression");
    bool first = true;
    while (pos_ < s_.size()) {
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Scalar coef = sign * coefficient();
      if (peek() == '*') ++pos_;
      expect('e');
      expect('^');
      std::vector<std::size_t> args = index_group(true);
      expect('_');
      std::vector<std::size_t> target = index_group(false);
      if (target.size() != 1) fail("target must be a single index");
      terms.push_back({coef, args, target[0]});
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cochain parse error at offset " + std::to_string(pos_) + ": " + what +
                " in '" + s_ + "'");
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  Scalar coefficient() {
    if (peek() == '(') {
      ++pos_;
      std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced '('");
      Scalar v = parse_scalar(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return v;
    }
    std::string num = digits();
    if (num.empty()) return 1;
    if (peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) fail("missing denominator");
      return parse_scalar(num + "/" + den);
    }
    return parse_scalar(num);
  }

  std::vector<std::size_t> index_group(bool allow_many) {
    std::vector<std::size_t> out;
    if (peek() == '{') {
      ++pos_;
      while (true) {
        std::string d = digits();
        if (d.empty()) fail("expected index");
        out.push_back(std::stoul(d));
        if (peek() == ',') {
          if (!allow_many) fail("unexpected ','");
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
    } else {
      // Unbraced: each digit is one index, as in e^{13}_3 written e^13_3.
      std::string d = digits();
      if (d.empty()) fail("expected index");
      if (allow_many) {
        for (char ch : d) out.push_back(static_cast<std::size_t>(ch - '0'));
      } else {
        out.push_back(std::stoul(d));
      }
    }
    return out;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymCochain parse_cochain(std::string_view text, std::size_t m, std::size_t degree) {
  auto terms = CochainParser(text).parse();
  if (!terms.empty()) degree = terms[0].args.size();
  SymCochain c(m, degree);
  for (const auto& t : terms) {
    if (t.args.size() != degree) throw Error("cochain terms of mixed degree in '" + std::string(text) + "'");
    std::vector<std::size_t> args;
    for (auto i : t.args) {
      if (i < 1 || i > m) throw Error("cochain index out of range in '" + std::string(text) + "'");
      args.push_back(i - 1);
    }
    if (t.k < 1 || t.k > m) throw Error("cochain index out of range in '" + std::string(text) + "'");
    c.at(args, t.k - 1) += t.coef;
  }
  return c;
}

}  // namespace jj
