// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "u21/gf.hpp"

namespace u21::grp {

using gf::Elem;
using gf::FieldPtr;

// Small square matrix (n <= 3) over the entry field GF(q0^2).
struct GMat {
  std::uint8_t n = 0;
  std::array<Elem, 9> a{};
  Elem operator()(int i, int j) const { return a[i * n + j]; }
  Elem& operator()(int i, int j) { return a[i * n + j]; }
  bool operator==(const GMat& o) const { return n == o.n && a == o.a; }
};

struct GMatHash {
  std::size_t operator()(const GMat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int k = 0; k < m.n * m.n; ++k) h = (h ^ m.a[k]) * 1099511628211ull;
    return (std::size_t)h;
  }
};

GMat identity(int n);
GMat mul(const gf::Field& f, const GMat& x, const GMat& y);
GMat diag(std::initializer_list<Elem> d);

// Unitary group U(2,1) (rank 3) or U(1,1) (rank 2) for the anti-diagonal
// hermitian form over k_F = GF(q0^2) / k_0 = GF(q0), q0 odd.
struct GroupSpec {
  int rank = 3;
  std::uint32_t q0 = 0;
  FieldPtr field;              // GF(q0^2)
  GMat form;                   // anti-diagonal J
  std::vector<GMat> generators;
  std::vector<std::string> generator_names;
  std::uint32_t conj_power = 1;  // conj(x) = x^(p^conj_power) = x^q0

  Elem conj(Elem x) const { return field->frobenius(x, conj_power); }
};

GroupSpec make_group(std::uint32_t q0, int rank);

GMat conj(const GroupSpec& g, const GMat& m);
GMat conj_transpose(const GroupSpec& g, const GMat& m);
bool is_unitary(const GroupSpec& g, const GMat& m);
GMat inverse(const GroupSpec& g, const GMat& m);  // J conj(m)^T J for unitary m

enum class OrderMethod { Formula, Enumerate };
std::uint64_t group_order(const GroupSpec& g, OrderMethod method);
// Closed forms: q^3(q-1)(q+1)^3(q^2-q+1) for rank 3; q(q-1)(q+1)^2 for rank 2.
std::uint64_t group_order_formula(std::uint32_t q0, int rank);
// The smaller rank-2 candidate q(q-1)(q+1), which is the order of the
// determinant-one subgroup.
std::uint64_t special_unitary_order_rank2(std::uint32_t q0);
// Breadth-first closure of the generators; EnumerationTooLarge beyond the
// desk limit (rank 3 needs q0 <= 3).
std::vector<GMat> enumerate(const GroupSpec& g);

// Upper triangular test, with diagonal returned. NotInGroup if m is not
// unitary.
bool borel_membership(const GroupSpec& g, const GMat& m, std::array<Elem, 3>* diag_out);

// Isotropic lines in k_F^n (first nonzero coordinate 1) with sections s(i)
// such that s(i) e_1 spans line i. Index 0 is the standard line <e_1>, the
// line <e_n> is last.
struct FlagTable {
  int rank = 3;
  std::vector<std::array<Elem, 3>> lines;
  std::vector<GMat> sections;
  std::vector<GMat> section_inverses;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::size_t size() const { return lines.size(); }
  std::size_t find(const std::array<Elem, 3>& v) const;
};

FlagTable flag_table(const GroupSpec& g);

struct CosetStep {
  std::size_t j;
  GMat b;  // s(j)^{-1} g s(i), upper triangular
};
CosetStep coset_action(const GroupSpec& g, const FlagTable& t, const GMat& m, std::size_t i);

std::uint64_t line_key(const std::array<Elem, 3>& v);

}  // namespace u21::grp
