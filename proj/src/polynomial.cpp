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

#include "jjdeform/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace jj {

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return b < a;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error("polynomial variable out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Scalar& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

bool Polynomial::is_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return std::accumulate(kv.first.begin(), kv.first.end(), 0u) == degree;
  });
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw Error("polynomial exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error("polynomial variable count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Scalar(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Scalar& s) const {
  Polynomial r(nvars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Scalar Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw Error("polynomial evaluation point has wrong length");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) <= max_degree) r.terms_.emplace(e, c);
  return r;
}

std::string to_string(const Polynomial& p, std::string_view var) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    Scalar mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    if (mono.empty()) {
      out += coef;
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  Polynomial p(nvars);
  if (s == "0") return p;
  if (s.empty()) throw Error("empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  };
  auto digits = [&]() {
    std::string d;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
    return d;
  };
  bool first = true;
  while (pos < s.size()) {
    Scalar sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Scalar coef = 1;
    bool have_coef = false;
    if (pos < s.size() && s[pos] == '(') {
      auto close = s.find(')', pos);
      if (close == std::string::npos) fail("unbalanced '('");
      coef = parse_scalar(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      have_coef = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num = digits();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        num += "/" + digits();
      }
      coef = parse_scalar(num);
      have_coef = true;
    }
    Exponent e(nvars, 0);
    bool any_factor = false;
    while (true) {
      std::size_t save = pos;
      if (pos < s.size() && s[pos] == '*') ++pos;
      if (s.compare(pos, var.size(), var) != 0) {
        pos = save;
        break;
      }
      pos += var.size();
      std::string idx = digits();
      if (idx.empty()) fail("expected variable index");
      std::size_t i = std::stoul(idx);
      if (i < 1 || i > nvars) fail("variable index out of range");
      unsigned power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string pw = digits();
        if (pw.empty()) fail("expected exponent");
        power = static_cast<unsigned>(std::stoul(pw));
      }
      e[i - 1] += power;
      any_factor = true;
    }
    if (!have_coef && !any_factor) fail("expected a coefficient or variable");
    p.add_term(e, sign * coef);
  }
  return p;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      e[i] = 0;
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

}  // namespace jj
