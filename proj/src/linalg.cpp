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

#include "jjdeform/linalg.hpp"

#include <algorithm>
#include <utility>

namespace jj {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }),
          s.end());
  if (s.empty()) throw Error("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + i, part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error("malformed rational '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

Scalar rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Vector& a, const Scalar& s) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] += s * b[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& x) { return x == 0; });
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) out[r] += a * v[c];
    }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) out(r, c) += a * o(k, c);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

namespace {

// Shared elimination driver. Rows are eliminated against the current pivot
// row either one after another or in an OpenMP loop; row updates are
// independent so both orders give the same matrix.
template <bool Parallel>
Rref rref_impl(const Matrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<Vector> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = input.row(r);

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[lead]);
    Vector& prow = a[lead];
    if (prow[c] != 1) {
      Scalar inv = 1 / prow[c];
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != 0) prow[j] *= inv;
    }
    const long long n = static_cast<long long>(rows);
    const std::size_t skip = lead;
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long long r = 0; r < n; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (ur == skip || a[ur][c] == 0) continue;
        Scalar f = a[ur][c];
        for (std::size_t j = c; j < cols; ++j)
          if (prow[j] != 0) a[ur][j] -= f * prow[j];
      }
    } else {
      for (long long r = 0; r < n; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (ur == skip || a[ur][c] == 0) continue;
        Scalar f = a[ur][c];
        for (std::size_t j = c; j < cols; ++j)
          if (prow[j] != 0) a[ur][j] -= f * prow[j];
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = std::move(a[r][c]);
  return {std::move(out), std::move(pivots)};
}

constexpr std::size_t kParallelThreshold = 4096;

}  // namespace

namespace serial {
Rref rref(const Matrix& m) { return rref_impl<false>(m); }
}  // namespace serial

namespace parallel {
Rref rref(const Matrix& m) { return rref_impl<true>(m); }
}  // namespace parallel

Rref rref(const Matrix& m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return parallel::rref(m);
  return serial::rref(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> a(n);
  for (std::size_t r = 0; r < n; ++r) a[r] = m.row(r);
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Rref rr = rref(aug);
  if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::row_space(const Matrix& m) {
  Rref rr = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(rr.pivots.size(), m.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = rr.reduced(r, c);
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::whole(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::normal_form(const Vector& v) const {
  if (v.size() != ambient_) throw Error("subspace ambient dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = pivots_[i]; c < ambient_; ++c)
      if (basis_(i, c) != 0) r[c] -= f * basis_(i, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(normal_form(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace ambient dimension mismatch");
  std::vector<Vector> rows = basis_vectors();
  for (auto& r : other.basis_vectors()) rows.push_back(std::move(r));
  return span(rows, ambient_);
}

bool member(const Vector& v, const Subspace& s) { return s.contains(v); }

std::optional<Vector> coordinates(const Vector& v, const Subspace& s) {
  return s.coordinates(v);
}

Subspace kernel_basis(const Rref& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, cols);
}

Subspace kernel_basis(const Matrix& m) { return kernel_basis(rref(m), m.cols()); }

Solver::Solver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
  Matrix aug(rows_, cols_ + rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = a(r, c);
    aug(r, cols_ + r) = 1;
  }
  Rref rr = rref(aug);
  for (auto p : rr.pivots)
    if (p < cols_) pivots_.push_back(p);
  reduced_ = std::move(rr.reduced);
  image_ = Subspace::column_space(a);
}

std::optional<Vector> Solver::solve(const Vector& b) const {
  if (b.size() != rows_) throw Error("solve: right-hand side length mismatch");
  // y = E b where E is the accumulated row-operation block.
  Vector y(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) {
      const Scalar& e = reduced_(r, cols_ + c);
      if (e != 0 && b[c] != 0) y[r] += e * b[c];
    }
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (y[r] != 0) return std::nullopt;
  Vector x = zero_vector(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) { return Solver(a).solve(b); }

Quotient::Quotient(const Subspace& sub, const Subspace& whole) : sub_(sub) {
  if (sub.ambient_dim() != whole.ambient_dim() || !whole.contains(sub))
    throw Error("quotient: subspace is not contained in the whole space");
  const std::size_t n = whole.ambient_dim();
  Subspace acc = sub;
  std::vector<Vector> forms;
  for (std::size_t i = 0; i < whole.dim(); ++i) {
    Vector w = whole.basis_vector(i);
    if (acc.contains(w)) continue;
    reps_.push_back(w);
    forms.push_back(sub.normal_form(w));
    acc = acc.sum(Subspace::span({w}, n));
  }
  const std::size_t k = reps_.size();
  Matrix aug(k, n + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = forms[r][c];
    aug(r, n + r) = 1;
  }
  Rref rr = rref(aug);
  reduced_ = Matrix(k, n);
  transform_ = Matrix(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) reduced_(r, c) = rr.reduced(r, c);
    for (std::size_t c = 0; c < k; ++c) transform_(r, c) = rr.reduced(r, n + c);
  }
  pivots_.assign(rr.pivots.begin(), rr.pivots.begin() + static_cast<long>(k));
}

Vector Quotient::reduce(const Vector& v) const {
  Vector nf = sub_.normal_form(v);
  const std::size_t k = reps_.size();
  Vector cr(k);
  Vector check = zero_vector(nf.size());
  for (std::size_t i = 0; i < k; ++i) {
    cr[i] = nf[pivots_[i]];
    if (cr[i] != 0) axpy(check, cr[i], reduced_.row(i));
  }
  if (check != nf) throw Error("quotient: vector outside the whole space");
  Vector out = zero_vector(k);
  for (std::size_t i = 0; i < k; ++i)
    if (cr[i] != 0)
      for (std::size_t j = 0; j < k; ++j) out[j] += cr[i] * transform_(i, j);
  return out;
}

Quotient quotient_data(const Subspace& sub, const Subspace& whole) {
  return Quotient(sub, whole);
}

}  // namespace jj
