// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "u21/matrix.hpp"
#include "u21/modrep.hpp"
#include "u21/poly.hpp"

// Submodule structure of finite-dimensional modules over finite fields:
// composition factors (Holt-Rees MeatAxe with Norton's test), homomorphism
// spaces, socle series and endomorphism algebras.
//
// Internally modules act on row vectors, v -> v g. A FlatModule (column
// action) is converted by transposing its generators, which leaves the
// lattice of submodules unchanged.
namespace u21::meataxe {

using gf::Elem;
using gf::FieldPtr;
using gf::poly::Poly;
using linalg::Matrix;
using linalg::Subspace;

struct Module {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
};

Module from_flat(const modrep::FlatModule& m);
modrep::FlatModule to_flat(const Module& m, const std::string& label);

// Linear combination of words in the generators.
struct AlgebraWord {
  struct Term {
    Elem coeff;
    std::vector<std::uint16_t> word;
  };
  std::vector<Term> terms;

  Matrix evaluate(const Module& m) const;
  std::string describe() const;
};

// Records how a factor was certified: seed lies in ker f(element), and the
// nullity of f(element) on the factor.
struct Witness {
  AlgebraWord element;
  Poly factor;
  std::vector<Elem> seed;
  std::size_t nullity = 0;
};

struct Factor {
  Module module;
  Witness witness;
  std::vector<Poly> fingerprint;
};

struct FactorEntry {
  int id = 0;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
};

struct CompositionReport {
  FieldPtr field;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t total_length = 0;
  std::vector<FactorEntry> factors;     // ordered by id
  std::vector<Factor> representatives;  // indexed by id
};

struct SocleReport {
  CompositionReport composition;
  // Layer k lists (factor id, multiplicity) of soc^{k+1}/soc^k.
  std::vector<std::vector<std::pair<int, std::size_t>>> layers;
  bool uniserial = false;
  bool semisimple = false;
};

struct EndAlgebra {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> basis;  // commute with the column-action generators
  // basis[a] * basis[b] = sum_c structure[(a*dim + b)*dim + c] basis[c]
  std::vector<Elem> structure;
};

struct QuadraticParameter {
  std::uint64_t d = 0;  // q0^exponent
  int exponent = 0;
  Elem lambda1 = 0, lambda2 = 0;  // eigenvalues with d = -lambda1/lambda2
  // Normalised T = -A/lambda2 satisfies T^2 = c1 T + c0.
  Elem c1 = 0, c0 = 0;
};

// Optional accelerator for hom_space: a source vector lying in the kernel of
// factor(element) on the source and generating it.
using HomHint = Witness;

CompositionReport chop(const Module& m, std::uint64_t seed);
bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed);
SocleReport socle_series(const Module& m, std::uint64_t seed);
// Basis of Hom(src, dst) as src.dim x dst.dim matrices x -> x phi.
std::vector<Matrix> hom_space(const Module& src, const Module& dst, const HomHint* hint = nullptr);
EndAlgebra endomorphism_algebra(const Module& m);
QuadraticParameter quadratic_parameter(const EndAlgebra& e, std::uint32_t q0);

// Helpers shared with tests.
Subspace spin(const Module& m, const std::vector<std::vector<Elem>>& seeds);
std::pair<Module, Module> split(const Module& m, const Subspace& w);
std::vector<Poly> fingerprint(const Module& m);

}  // namespace u21::meataxe
