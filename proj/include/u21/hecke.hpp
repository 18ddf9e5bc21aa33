// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "u21/grp.hpp"

// Two-generator Hecke algebras with quadratic relations
//   f_x^2 = (q^a - 1) f_x + q^a,   f_y^2 = (q - 1) f_y + q,
// their one-dimensional characters, and convolution of bi-invariant
// functions on an enumerated finite group.
namespace u21::hecke {

struct HeckeParams {
  std::uint32_t q = 0;
  int a = 3;              // 1 or 3
  std::uint32_t ell = 0;  // 0: exact integers
};

// f^2 = c1 f + c0, coefficients reduced mod ell (exact when ell = 0).
struct QuadraticRelation {
  std::string generator;
  std::int64_t c1 = 0, c0 = 0;
};

struct Rational {
  std::int64_t num = 1, den = 1;
  std::string str() const;
};

struct HeckePresentation {
  HeckeParams params;
  QuadraticRelation rel_x, rel_y;
  // Values at the identity: f_x(1) = 1 for a = 3 and 1/q for a = 1; f_y(1) = 1.
  Rational fx_at_one, fy_at_one;
};

struct HeckeCharacter {
  std::string name;                  // first name in table order
  std::vector<std::string> aliases;  // names identified with it mod ell
  std::int64_t value_x = 0, value_y = 0;
};

enum class Collapse { Distinct, Pairs, Unique };
const char* collapse_name(Collapse c);

// BadParameters unless q is an odd prime power, a in {1,3} and ell is 0 or a
// prime different from the characteristic of q.
HeckePresentation presentation(std::uint32_t q, int a, std::uint32_t ell);
std::vector<HeckeCharacter> characters(const HeckePresentation& p);
Collapse collapse_case(const HeckePresentation& p);
// Reduces x mod ell (identity for ell = 0), into [0, ell).
std::int64_t reduce(std::int64_t x, std::uint32_t ell);

// Laurent polynomial algebra R[X, X^-1]: one character per invertible scalar.
struct LaurentAlgebra {
  std::uint32_t q = 0, ell = 0;
  std::string description() const;
  // Character X -> x; ZeroArgument if x vanishes in R.
  std::int64_t character(std::int64_t x) const;
};
LaurentAlgebra characters_regular(std::uint32_t q, std::uint32_t ell);

// Enumerated finite group with element indices.
struct FiniteGroup {
  grp::GroupSpec spec;
  std::vector<grp::GMat> elements;
  std::unordered_map<grp::GMat, std::uint32_t, grp::GMatHash> index;
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity = 0;

  std::size_t order() const { return elements.size(); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t find(const grp::GMat& m) const;
};
std::shared_ptr<const FiniteGroup> enumerate_group(const grp::GroupSpec& g);

// Subgroup with its left cosets gK.
struct Subgroup {
  std::vector<std::uint32_t> members;  // sorted
  std::vector<std::uint32_t> coset_reps;
  std::vector<std::uint32_t> coset_of;  // element -> coset number
};
std::shared_ptr<const Subgroup> make_subgroup(const FiniteGroup& g, std::vector<std::uint32_t> members);
std::shared_ptr<const Subgroup> borel_subgroup(const FiniteGroup& g);

// K-bi-invariant function G -> field.
struct BiFunction {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Subgroup> sub;
  gf::FieldPtr field;
  std::vector<gf::Elem> values;  // indexed by element
  gf::Elem at(std::uint32_t x) const { return values[x]; }
};

// value times the indicator of K x K.
BiFunction double_coset_indicator(std::shared_ptr<const FiniteGroup> g, std::shared_ptr<const Subgroup> k,
                                  gf::FieldPtr field, std::uint32_t x, gf::Elem value);
// (f1 * f2)(h) = sum over gK in G/K of f1(g) f2(g^-1 h). SubgroupMismatch
// when the functions live on different groups or subgroups.
BiFunction convolve(const BiFunction& f1, const BiFunction& f2);

}  // namespace u21::hecke
