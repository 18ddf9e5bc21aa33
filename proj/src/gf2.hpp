// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

// Bit-packed GF(2) kernels, 64 entries per word.

#include <cstdint>
#include <vector>

#include "u21/matrix.hpp"

namespace u21::linalg::gf2 {

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), w_((cols + 63) / 64), bits_(rows * w_, 0) {}
  static BitMatrix from(const Matrix& m);
  Matrix to(const FieldPtr& f) const;

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::size_t words() const { return w_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * w_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * w_; }
  bool get(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
  void swap_rows(std::size_t a, std::size_t b);
  void xor_row(std::size_t dst, std::size_t src);

 private:
  std::size_t r_, c_, w_;
  std::vector<std::uint64_t> bits_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
// In-place reduced echelon form restricted to the first `limit` columns.
std::vector<std::size_t> rref(BitMatrix& m, std::size_t limit);
BitMatrix left_nullspace(const BitMatrix& m);

}  // namespace u21::linalg::gf2
