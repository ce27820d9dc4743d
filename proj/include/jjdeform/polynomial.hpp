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

#ifndef JJDEFORM_POLYNOMIAL_HPP_
#define JJDEFORM_POLYNOMIAL_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jjdeform/linalg.hpp"

namespace jj {

using Exponent = std::vector<unsigned>;

/// Higher total degree first, then lexicographically larger exponents, so
/// t1^2 < t1*t2 < t2^2 < t1 in iteration order (leading terms first).
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over the rationals in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Scalar, MonomialOrder>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  bool is_homogeneous(unsigned degree) const;
  Scalar coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& s) const;
  Polynomial& operator+=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;

  Scalar evaluate(const Vector& point) const;
  /// Drops every term of total degree above max_degree.
  Polynomial truncated(unsigned max_degree) const;

 private:
  void check(const Polynomial& o) const;

  std::size_t nvars_;
  Terms terms_;
};

/// "t1^2 - 2*t1*t3 + (1/2)*t4", variables 1-based; "0" when zero.
std::string to_string(const Polynomial& p, std::string_view var = "t");
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, std::string_view var = "t");

/// Exponent vectors of all monomials of the given degree, in MonomialOrder.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace jj

#endif  // JJDEFORM_POLYNOMIAL_HPP_
