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
#include <iosfwd>
#include <string>
#include <vector>

#include "u21/grp.hpp"
#include "u21/matrix.hpp"

namespace u21::modrep {

using gf::Elem;
using gf::FieldPtr;
using linalg::Matrix;

// Character of the diagonal torus, diag(x, y, conj(x)^-1) ->
// chi1(x) * chi2(x^(1-q0) y), with chi1 of exponent e1 on the cyclic group
// k_F^x = <g> and chi2 of exponent e2 on the norm-one subgroup <g^(q0-1)>.
// Exponents are stored after projection to their prime-to-ell parts.
struct TorusCharacter {
  std::uint32_t q0 = 0;
  std::uint32_t ell = 0;
  std::int64_t e1_input = 0, e2_input = 0;
  std::uint64_t e1 = 0, e2 = 0;      // projected, in [0, q0^2-1) and [0, q0+1)
  std::uint64_t ord1 = 1, ord2 = 1;  // orders of chi1 and chi2
  FieldPtr entry_field;              // GF(q0^2)
  FieldPtr coeff;                    // GF(ell^m)

  Elem chi1(Elem x) const;
  Elem chi2(Elem y) const;  // y in the norm-one subgroup
  // Value on the diagonal part of a Borel element of the given rank.
  Elem on_diagonal(const std::array<Elem, 3>& d, int rank) const;
  bool chi1_trivial() const { return e1 == 0; }
  // chi1^(q0+1) == 1, i.e. chi1 factors through x -> x^(q0-1).
  bool chi1_nonregular() const;
};

// Replaces e mod n by the residue agreeing with e on the prime-to-ell part
// of Z/n and vanishing on the ell-part.
std::uint64_t project_exponent(std::int64_t e, std::uint64_t n, std::uint32_t ell);

TorusCharacter torus_character(std::uint32_t q0, std::int64_t e1, std::int64_t e2, std::uint32_t ell);

// Module given by generator matrices acting on column vectors.
struct FlatModule {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::string label;
};

// Matrix of g on Ind_B^G chi in the flag basis: column i holds chi(b) in
// row j where g s(i) = s(j) b.
Matrix induced_matrix(const grp::GroupSpec& g, const grp::FlagTable& t, const TorusCharacter& chi,
                      const grp::GMat& m);
FlatModule induced_module(const grp::GroupSpec& g, const grp::FlagTable& t, const TorusCharacter& chi);

void write_fmod(std::ostream& os, const FlatModule& m);
FlatModule read_fmod(std::istream& is);
void save_fmod(const std::string& path, const FlatModule& m);
FlatModule load_fmod(const std::string& path);

}  // namespace u21::modrep
