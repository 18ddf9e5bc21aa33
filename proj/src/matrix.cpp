// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/matrix.hpp"

#include <utility>

#include "gf2.hpp"

namespace u21::linalg {

namespace {

bool is_gf2(const gf::Field& f) { return f.order() == 2; }

void check_same(const Matrix& a, const Matrix& b) {
  if (!a.field() || !b.field() || !a.F().same_as(b.F()))
    fail(ErrorCode::FieldMismatch, "matrices over different fields");
}

}  // namespace

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return is_zero_vec(d_); }

bool Matrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < i && j < c_; ++j)
      if ((*this)(i, j)) return false;
  return true;
}

Matrix Matrix::row_block(std::size_t from, std::size_t count) const {
  Matrix m(f_, count, c_);
  std::copy(d_.begin() + from * c_, d_.begin() + (from + count) * c_, m.d_.begin());
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != c_) fail(ErrorCode::InvalidArgument, "row length mismatch");
  d_.insert(d_.end(), v.begin(), v.end());
  ++r_;
}

bool is_zero_vec(std::span<const Elem> v) {
  for (Elem x : v)
    if (x) return false;
  return true;
}

void axpy(const gf::Field& f, std::span<Elem> dst, Elem s, std::span<const Elem> src) {
  if (s == 0) return;
  const std::size_t n = dst.size();
  Elem* d = dst.data();
  const Elem* x = src.data();
  if (f.characteristic() == 2 && s == 1) {
    for (std::size_t j = 0; j < n; ++j) d[j] ^= x[j];
    return;
  }
  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    for (std::size_t j = 0; j < n; ++j) d[j] = (Elem)((d[j] + (std::uint64_t)s * x[j]) % p);
    return;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (x[j]) d[j] = f.add(d[j], f.mul(s, x[j]));
}

void scale_row(const gf::Field& f, std::span<Elem> v, Elem s) {
  if (s == 1) return;
  for (Elem& x : v) x = f.mul(x, s);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  if (a.cols() != b.rows()) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
  const gf::Field& f = a.F();
  if (is_gf2(f)) {
    auto c = gf2::multiply(gf2::BitMatrix::from(a), gf2::BitMatrix::from(b));
    return c.to(a.field());
  }
  Matrix c(a.field(), a.rows(), b.cols());
  const std::size_t n = b.cols();
  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t s = a(i, k);
        if (!s) continue;
        const Elem* br = b.row(k).data();
        for (std::size_t j = 0; j < n; ++j) acc[j] += s * br[j];
      }
      for (std::size_t j = 0; j < n; ++j) c(i, j) = (Elem)(acc[j] % p);
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(f, c.row(i), a(i, k), b.row(k));
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.F().add(a.data()[k], b.data()[k]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = a.F().sub(a.data()[k], b.data()[k]);
  return c;
}

Matrix scaled(const Matrix& a, Elem s) {
  Matrix c = a;
  for (Elem& x : c.data()) x = a.F().mul(x, s);
  return c;
}

std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m) {
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) axpy(m.F(), out, v[k], m.row(k));
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  const gf::Field& f = m.F();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    scale_row(f, m.row(r), f.inv(m(r, col)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, col)) axpy(f, m.row(i), f.neg(m(i, col)), m.row(r));
    piv.push_back(col);
    ++r;
  }
  return piv;
}

std::size_t rank(const Matrix& m) {
  if (is_gf2(m.F())) {
    auto b = gf2::BitMatrix::from(m);
    return gf2::rref(b, b.cols()).size();
  }
  Matrix t = m;
  return rref(t).size();
}

Matrix left_nullspace(const Matrix& m) {
  const std::size_t n = m.rows(), c = m.cols();
  if (is_gf2(m.F())) return gf2::left_nullspace(gf2::BitMatrix::from(m)).to(m.field());
  Matrix aug(m.field(), n, c + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
    aug(i, c + i) = 1;
  }
  // Eliminate on the left block only.
  const gf::Field& f = m.F();
  std::size_t r = 0;
  for (std::size_t col = 0; col < c && r < n; ++col) {
    std::size_t p = r;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != r)
      for (std::size_t j = 0; j < c + n; ++j) std::swap(aug(p, j), aug(r, j));
    scale_row(f, aug.row(r), f.inv(aug(r, col)));
    for (std::size_t i = r + 1; i < n; ++i)
      if (aug(i, col)) axpy(f, aug.row(i), f.neg(aug(i, col)), aug.row(r));
    ++r;
  }
  Matrix ns(m.field(), n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ns(i - r, j) = aug(i, c + j);
  rref(ns);
  return ns;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Matrix tmp = aug;
  auto piv = rref(tmp);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = tmp(i, n + j);
  return inv;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(ErrorCode::InvalidArgument, "vstack column mismatch");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), c.data().begin());
  std::copy(b.data().begin(), b.data().end(), c.data().begin() + a.data().size());
  return c;
}

bool Subspace::reduce(std::span<Elem> v) const {
  const gf::Field& f = *f_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[piv_[i]];
    if (c) axpy(f, v, f.neg(c), rows_[i]);
  }
  return is_zero_vec(v);
}

bool Subspace::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  return reduce(w);
}

bool Subspace::insert(std::span<const Elem> v) {
  if (v.size() != n_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  if (rows_.size() == n_) return false;
  const gf::Field& f = *f_;
  std::vector<Elem> w(v.begin(), v.end());
  std::vector<Elem> e;
  if (track_) {
    e.assign(n_, 0);
    e[inserted_] = 1;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = w[piv_[i]];
    if (!c) continue;
    Elem nc = f.neg(c);
    axpy(f, w, nc, rows_[i]);
    if (track_) axpy(f, e, nc, expr_[i]);
  }
  std::size_t p = 0;
  while (p < n_ && w[p] == 0) ++p;
  if (p == n_) return false;
  Elem s = f.inv(w[p]);
  scale_row(f, w, s);
  rows_.push_back(std::move(w));
  piv_.push_back(p);
  if (track_) {
    scale_row(f, e, s);
    expr_.push_back(std::move(e));
    ++inserted_;
  }
  return true;
}

std::optional<std::vector<Elem>> Subspace::express(std::span<const Elem> v) const {
  if (!track_) fail(ErrorCode::Internal, "express() needs tracking");
  const gf::Field& f = *f_;
  std::vector<Elem> w(v.begin(), v.end());
  std::vector<Elem> coeff(n_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = w[piv_[i]];
    if (!c) continue;
    axpy(f, w, f.neg(c), rows_[i]);
    axpy(f, coeff, c, expr_[i]);
  }
  if (!is_zero_vec(w)) return std::nullopt;
  coeff.resize(inserted_);
  return coeff;
}

Matrix Subspace::basis() const {
  Matrix m(f_, rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), m.row(i).begin());
  return m;
}

Matrix Subspace::rref_basis(std::vector<std::size_t>* pivots) const {
  Matrix m = basis();
  auto p = rref(m);
  if (pivots) *pivots = std::move(p);
  return m;
}

}  // namespace u21::linalg
