// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "gf2.hpp"

#include <utility>

namespace u21::linalg::gf2 {

BitMatrix BitMatrix::from(const Matrix& m) {
  BitMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) b.set(i, j);
  return b;
}

Matrix BitMatrix::to(const FieldPtr& f) const {
  Matrix m(f, r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = get(i, j) ? 1 : 0;
  return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < w_; ++k) std::swap(row(a)[k], row(b)[k]);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t k = 0; k < w_; ++k) d[k] ^= s[k];
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  const std::size_t w = b.words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* out = c.row(i);
    const std::uint64_t* ar = a.row(i);
    for (std::size_t kw = 0; kw < a.words(); ++kw) {
      std::uint64_t bits = ar[kw];
      while (bits) {
        unsigned t = (unsigned)__builtin_ctzll(bits);
        bits &= bits - 1;
        const std::uint64_t* br = b.row(kw * 64 + t);
        for (std::size_t k = 0; k < w; ++k) out[k] ^= br[k];
      }
    }
  }
  return c;
}

std::vector<std::size_t> rref(BitMatrix& m, std::size_t limit) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < limit && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, col)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, col)) m.xor_row(i, r);
    piv.push_back(col);
    ++r;
  }
  return piv;
}

BitMatrix left_nullspace(const BitMatrix& m) {
  // Reduce [m | I]; rows whose left part vanishes give the nullspace.
  const std::size_t n = m.rows(), c = m.cols();
  BitMatrix aug(n, c + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j)
      if (m.get(i, j)) aug.set(i, j);
    aug.set(i, c + i);
  }
  auto piv = rref(aug, c);
  BitMatrix ns(n - piv.size(), n);
  for (std::size_t i = piv.size(); i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug.get(i, c + j)) ns.set(i - piv.size(), j);
  // Reduce the result so callers see a canonical basis.
  rref(ns, n);
  return ns;
}

}  // namespace u21::linalg::gf2
