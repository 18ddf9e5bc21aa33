// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u21/grp.hpp"
#include "u21/meataxe.hpp"

// Predicted structure of principal series: the finite groups U(2,1)(q),
// U(1,1)(q) in non-defining characteristic ell, and the level-zero and
// positive-level p-adic principal series of U(2,1). ell = 0 stands for the
// ell-adic (characteristic zero) case.
namespace u21::classify {

// Irreducible constituent. Finite labels carry dimensions; p-adic labels
// wrap a finite cuspidal label (I_Lambda_x(...), ...) or name a
// non-cuspidal constituent and carry none.
struct Label {
  std::string kind;
  std::string param;         // character parameter, e.g. "1" or "psi"
  std::vector<Label> inner;  // at most one: the finite label under I_*
  std::optional<std::uint64_t> dim_ladic, dim_mod;
  bool cuspidal = false;

  std::string str() const;
  bool operator==(const Label& o) const;
};

struct StructureReport {
  std::string scope;  // "finite" or "padic"
  int rank = 3;
  std::uint32_t q = 0, ell = 0;
  bool reducible = false;
  std::size_t length = 0;
  std::vector<std::pair<Label, std::size_t>> factors;
  // Socle layers (bottom first) as (factor index, multiplicity); empty when
  // the theorem leaves them open.
  std::vector<std::vector<std::pair<int, std::size_t>>> layers;
  std::optional<bool> uniserial, semisimple, sub_iso_quotient;
  bool has_cuspidal = false;
  std::optional<std::string> unique_sub, unique_quotient;
  std::string clause;
  std::vector<std::string> notes;

  std::uint64_t total_dim() const;  // sum of dim_mod * multiplicity
};

struct NamedValue {
  std::string name;
  std::uint64_t value;
};

// Characteristic-zero dimensions and family sizes.
struct DimensionTable {
  std::uint32_t q = 0;
  std::vector<NamedValue> dims, counts;
  std::uint64_t dim(const std::string& name) const;
};
DimensionTable ladic_dimension_table(std::uint32_t q);

struct ModularDims {
  std::uint64_t nu_bar = 0, sigma_bar = 0, sigma_bar_rank2 = 0;
  std::optional<std::uint64_t> tau_plus;  // only when it fails to lift
};
ModularDims modular_constituent_dims(std::uint32_t q, std::uint32_t ell);

// UnsupportedCase for ell = p and for rank 3 with 3 = ell | q+1 and chi1
// trivial.
StructureReport finite_ps_structure(std::uint32_t q, std::uint32_t ell, std::int64_t e1, std::int64_t e2,
                                    int rank);

enum class Level { Zero, Positive };
enum class Chi1Class {
  Trivial,
  DeltaHalf,
  DeltaMinusHalf,
  EtaDeltaQuarter,
  EtaDeltaMinusQuarter,
  UnitaryPullback,  // chi1 nontrivial, trivial on F0^x
  RegularOther
};
const char* chi1_class_name(Chi1Class c);
std::optional<Chi1Class> parse_chi1_class(const std::string& s);

struct PadicCharDescriptor {
  Level level = Level::Zero;
  Chi1Class chi1 = Chi1Class::Trivial;
  bool chi2_absorbed = true;  // chi2 factors through det and is twisted away
  std::uint32_t q = 0, ell = 0;

  bool operator==(const PadicCharDescriptor& o) const;
};

// Replaces an unramified class by the first class in the order
// delta^-1/2, delta^1/2, eta delta^1/4, eta delta^-1/4, trivial taking the
// same value at the uniformiser mod ell.
PadicCharDescriptor collapse(const PadicCharDescriptor& d);

struct Verdict {
  bool reducible = false;
  int clause = 0;  // 1: delta^(+-1/2), 2: eta delta^(+-1/4), 3: unitary pullback
};
Verdict padic_reducibility(const PadicCharDescriptor& d);
StructureReport padic_ps_structure(const PadicCharDescriptor& d);

// Finite composition factors with cuspidality decided by the fixed points
// of the unipotent radical.
struct ObservedFactor {
  std::size_t dim = 0, multiplicity = 0;
  bool cuspidal = false;
};
struct FiniteObservation {
  int rank = 3;
  std::uint32_t q = 0, ell = 0;
  std::vector<ObservedFactor> factors;
};
FiniteObservation observe(const grp::GroupSpec& g, const meataxe::CompositionReport& r);

// Level-zero descriptor whose parahoric restrictions are the finite
// principal series of (e1, e2).
PadicCharDescriptor descriptor_for_finite(std::uint32_t q, std::uint32_t ell, std::int64_t e1, std::int64_t e2);

struct BridgeResult {
  bool ok = false;
  std::vector<std::string> problems;
};
// Cuspidal constituents predicted inside I_Lambda_x / I_Lambda_y labels must
// occur in the U(2,1) / U(1,1) observations, and those observations must
// contain no other cuspidal factor. MismatchedParameters if q, ell or the
// ranks disagree.
BridgeResult bridge_check(const PadicCharDescriptor& d, const FiniteObservation& x, const FiniteObservation& y);

// Factor multiset and layers of a prediction against a MeatAxe run;
// returns the list of differences.
std::vector<std::string> compare_finite(const StructureReport& predicted, const FiniteObservation& obs,
                                        const meataxe::SocleReport* socle);

}  // namespace u21::classify
