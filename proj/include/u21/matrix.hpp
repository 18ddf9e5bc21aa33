// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "u21/gf.hpp"

namespace u21::linalg {

using gf::Elem;
using gf::FieldPtr;

// Dense row-major matrix of field codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), r_(rows), c_(cols), d_(rows * cols, 0) {}
  static Matrix identity(FieldPtr f, std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const FieldPtr& field() const { return f_; }
  const gf::Field& F() const { return *f_; }

  Elem operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  std::span<Elem> row(std::size_t i) { return {d_.data() + i * c_, c_}; }
  std::span<const Elem> row(std::size_t i) const { return {d_.data() + i * c_, c_}; }
  const std::vector<Elem>& data() const { return d_; }
  std::vector<Elem>& data() { return d_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  // Rows [from, from + count).
  Matrix row_block(std::size_t from, std::size_t count) const;
  void append_row(std::span<const Elem> v);

 private:
  FieldPtr f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elem> d_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Elem s);
// Row vector times matrix.
std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m);

// dst += s * src.
void axpy(const gf::Field& f, std::span<Elem> dst, Elem s, std::span<const Elem> src);
void scale_row(const gf::Field& f, std::span<Elem> v, Elem s);
bool is_zero_vec(std::span<const Elem> v);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);
// Rows spanning {v : v m = 0}, in reduced echelon form.
Matrix left_nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Stacks rows of a over rows of b.
Matrix vstack(const Matrix& a, const Matrix& b);

// Semi-echelon subspace of row vectors. With tracking enabled, every basis
// row also carries its expression in the inserted vectors, so a member can be
// written as a combination of the original spanning sequence.
class Subspace {
 public:
  Subspace(FieldPtr f, std::size_t ambient, bool track = false)
      : f_(std::move(f)), n_(ambient), track_(track) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const FieldPtr& field() const { return f_; }

  // Reduces v in place; returns true if v ended as zero.
  bool reduce(std::span<Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  // Inserts v; returns false if v is already in the span. With tracking an
  // accepted v becomes the next vector of the spanning sequence.
  bool insert(std::span<const Elem> v);
  // Coefficients of v in the inserted sequence; empty if v is not in span.
  // Tracking only.
  std::optional<std::vector<Elem>> express(std::span<const Elem> v) const;
  std::size_t inserted() const { return inserted_; }

  Matrix basis() const;
  // Basis in reduced echelon form plus its pivots.
  Matrix rref_basis(std::vector<std::size_t>* pivots) const;

 private:
  FieldPtr f_;
  std::size_t n_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<std::vector<Elem>> expr_;
};

}  // namespace u21::linalg
