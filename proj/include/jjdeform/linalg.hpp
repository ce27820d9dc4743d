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

#ifndef JJDEFORM_LINALG_HPP_
#define JJDEFORM_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jj {

/// Exact rational; mpq_class keeps values canonical after every operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Every domain or precondition failure in the library throws this.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Throws Error on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);
/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// arithmetic on unreduced values is undefined in GMP. Throws for den = 0.
Scalar rational(long num, long den);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Matrix transpose() const;
  bool is_zero() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with leftmost-nonzero pivoting. Dispatches to
/// the parallel kernel for large inputs; results are identical either way.
Rref rref(const Matrix& m);

namespace serial {
Rref rref(const Matrix& m);
}  // namespace serial

namespace parallel {
Rref rref(const Matrix& m);
}  // namespace parallel

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Row space with a canonical basis: the nonzero rows of an rref.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Unique expansion over basis() when v is a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Subtracts the basis rows so that v vanishes on every pivot column.
  Vector normal_form(const Vector& v) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

bool member(const Vector& v, const Subspace& s);
std::optional<Vector> coordinates(const Vector& v, const Subspace& s);

Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const Rref& r, std::size_t cols);

/// Some x with a*x = b; zero in every non-pivot coordinate of rref(a).
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Precomputed elimination for repeated solves against one matrix.
class Solver {
 public:
  explicit Solver(const Matrix& a);
  std::optional<Vector> solve(const Vector& b) const;
  std::size_t rank() const { return pivots_.size(); }
  const Subspace& image() const { return image_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  // rref of [a | I]; the right block records the row operations.
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
  Subspace image_;
};

/// Quotient whole/sub with representatives chosen from the rref basis of
/// whole, in order, whenever they are independent of sub and earlier picks.
class Quotient {
 public:
  Quotient(const Subspace& sub, const Subspace& whole);

  std::size_t dim() const { return reps_.size(); }
  const std::vector<Vector>& representatives() const { return reps_; }
  /// Coordinates of the class of v (v must lie in whole).
  Vector reduce(const Vector& v) const;
  const Subspace& sub() const { return sub_; }

 private:
  Subspace sub_;
  std::vector<Vector> reps_;
  // Normal forms of reps_ modulo sub_, put in rref with tracked row ops.
  Matrix reduced_;
  Matrix transform_;
  std::vector<std::size_t> pivots_;
};

Quotient quotient_data(const Subspace& sub, const Subspace& whole);

}  // namespace jj

#endif  // JJDEFORM_LINALG_HPP_
