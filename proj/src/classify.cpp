// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace u21::classify {

namespace {

using U = std::uint64_t;

bool divides(std::uint32_t ell, U n) { return ell != 0 && n % ell == 0; }

void check_q(std::uint32_t q) {
  std::uint32_t p = 0, m = 0;
  if (q < 3 || !gf::prime_power(q, p, m) || p == 2)
    fail(ErrorCode::BadParameters, "q must be an odd prime power, got " + std::to_string(q));
}

void check_ell(std::uint32_t q, std::uint32_t ell) {
  if (ell != 0 && !gf::is_prime(ell)) fail(ErrorCode::BadParameters, "ell must be 0 or prime");
  if (ell != 0 && q % ell == 0)
    fail(ErrorCode::UnsupportedCase, "ell = p (defining characteristic) is outside the theory");
}

Label finite(const std::string& kind, const std::string& param, std::optional<U> ladic, U mod, bool cusp) {
  Label l;
  l.kind = kind;
  l.param = param;
  l.dim_ladic = ladic;
  l.dim_mod = mod;
  l.cuspidal = cusp;
  return l;
}

Label wrap(const std::string& kind, Label inner) {
  Label l;
  l.kind = kind;
  l.cuspidal = true;
  l.inner.push_back(std::move(inner));
  return l;
}

Label padic(const std::string& kind, const std::string& param = "") {
  Label l;
  l.kind = kind;
  l.param = param;
  return l;
}

U tau_plus_dim(U q, U nu_copies) { return (q - 1) * (q + 1) * (q + 1) - nu_copies * q * (q - 1); }

void finish(StructureReport& r) {
  r.length = 0;
  r.has_cuspidal = false;
  for (const auto& [l, m] : r.factors) {
    r.length += m;
    r.has_cuspidal = r.has_cuspidal || l.cuspidal;
  }
  r.reducible = r.length > 1;
}

// Chain of single factors, bottom first.
void uniserial_layers(StructureReport& r, const std::vector<int>& chain) {
  for (int i : chain) r.layers.push_back({{i, 1}});
  r.uniserial = true;
  r.semisimple = chain.size() <= 1;
}

void semisimple_layer(StructureReport& r) {
  std::vector<std::pair<int, std::size_t>> layer;
  for (std::size_t i = 0; i < r.factors.size(); ++i) layer.push_back({(int)i, r.factors[i].second});
  r.layers = {layer};
  r.semisimple = true;
  r.uniserial = r.length <= 1;
}

U chi1_order(std::uint32_t q, std::uint32_t ell, std::int64_t e1) {
  const U n1 = (U)q * q - 1;
  std::int64_t r = e1 % (std::int64_t)n1;
  if (r < 0) r += (std::int64_t)n1;
  U e = ell ? modrep::project_exponent(e1, n1, ell) : (U)r;
  return n1 / std::gcd(e, n1);
}

}  // namespace

std::string Label::str() const {
  std::string s = kind;
  if (!inner.empty()) return s + "(" + inner[0].str() + ")";
  if (!param.empty()) s += "(" + param + ")";
  return s;
}

bool Label::operator==(const Label& o) const {
  return kind == o.kind && param == o.param && inner == o.inner && dim_ladic == o.dim_ladic &&
         dim_mod == o.dim_mod && cuspidal == o.cuspidal;
}

std::uint64_t StructureReport::total_dim() const {
  U s = 0;
  for (const auto& [l, m] : factors) s += l.dim_mod.value_or(0) * m;
  return s;
}

std::uint64_t DimensionTable::dim(const std::string& name) const {
  for (const auto& d : dims)
    if (d.name == name) return d.value;
  fail(ErrorCode::InvalidArgument, "no dimension named " + name);
}

DimensionTable ladic_dimension_table(std::uint32_t q) {
  check_q(q);
  const U Q = q;
  DimensionTable t;
  t.q = q;
  t.dims = {{"sigma", (Q - 1) * (Q * Q - Q + 1)},
            {"tau", (Q - 1) * (Q + 1) * (Q + 1)},
            {"nu", Q * (Q - 1)},
            {"St", Q * Q * Q},
            {"R_1", Q * Q - Q + 1},
            {"R_St", Q * (Q * Q - Q + 1)},
            {"sigma_rank2", Q - 1},
            {"St_rank2", Q}};
  t.counts = {{"sigma", (Q + 1) * Q * (Q - 1) / 6},
              {"tau", (Q + 1) * Q * (Q - 1) / 3},
              {"nu", Q + 1},
              {"sigma_rank2", (Q * Q + Q) / 2}};
  return t;
}

ModularDims modular_constituent_dims(std::uint32_t q, std::uint32_t ell) {
  check_q(q);
  check_ell(q, ell);
  const U Q = q;
  ModularDims d;
  d.nu_bar = Q * (Q - 1);
  d.sigma_bar = (Q - 1) * (Q * Q - Q + 1);
  d.sigma_bar_rank2 = Q - 1;
  if (ell != 3 && divides(ell, Q * Q - Q + 1))
    d.tau_plus = tau_plus_dim(Q, 1);
  else if (ell == 2 && (Q - 1) % 4 == 0)
    d.tau_plus = tau_plus_dim(Q, 2);
  return d;
}

StructureReport finite_ps_structure(std::uint32_t q, std::uint32_t ell, std::int64_t e1, std::int64_t e2, int rank) {
  check_q(q);
  if (rank != 2 && rank != 3) fail(ErrorCode::BadParameters, "rank must be 2 or 3");
  check_ell(q, ell);
  (void)e2;  // a twist by chi2 o det does not change the structure
  const U Q = q;
  StructureReport r;
  r.scope = "finite";
  r.rank = rank;
  r.q = q;
  r.ell = ell;
  const U ord1 = chi1_order(q, ell, e1);
  const bool regular = (Q + 1) % ord1 != 0;
  const bool trivial = ord1 == 1;

  if (regular) {
    r.factors = {{finite("PS", "chi", rank == 3 ? Q * Q * Q + 1 : Q + 1, rank == 3 ? Q * Q * Q + 1 : Q + 1, false), 1}};
    r.clause = "regular";
    finish(r);
    semisimple_layer(r);
    return r;
  }

  if (rank == 2) {
    // chi = chi' o xi and Ind chi = Ind 1 (x) (chi' o det).
    if (!trivial) r.notes.push_back("chi1 = chi' o xi; twisted to the trivial case by chi' o det");
    if (divides(ell, Q + 1)) {
      r.factors = {{finite("triv", "chi' o det", 1, 1, false), 2}, {finite("sigma_bar", "chi'", Q - 1, Q - 1, true), 1}};
      r.clause = "ell | q+1: uniserial of length three";
      finish(r);
      uniserial_layers(r, {0, 1, 0});
      r.sub_iso_quotient = true;
      r.unique_sub = r.unique_quotient = r.factors[0].first.str();
    } else {
      r.factors = {{finite("triv", "chi' o det", 1, 1, false), 1}, {finite("St", "chi' o det", Q, Q, false), 1}};
      r.clause = "ell does not divide q+1: semisimple";
      finish(r);
      semisimple_layer(r);
      r.sub_iso_quotient = false;
    }
    return r;
  }

  if (!trivial) {
    // chi1 = chi1' o xi with chi1' nontrivial.
    const U r1 = Q * Q - Q + 1;
    if (divides(ell, Q + 1)) {
      r.factors = {{finite("R_1H", "chi1'", r1, r1, false), 2},
                   {finite("sigma3", "chi1',chi1',chi2", (Q - 1) * r1, (Q - 1) * r1, true), 1}};
      r.clause = "chi1 = chi1' o xi nontrivial, ell | q+1: uniserial of length three";
      finish(r);
      uniserial_layers(r, {0, 1, 0});
      r.sub_iso_quotient = true;
      r.unique_sub = r.unique_quotient = r.factors[0].first.str();
    } else {
      r.factors = {{finite("R_1H", "chi1'", r1, r1, false), 1}, {finite("R_StH", "chi1'", Q * r1, Q * r1, false), 1}};
      r.clause = "chi1 = chi1' o xi nontrivial, ell does not divide q+1: no cuspidal subquotients";
      finish(r);
      semisimple_layer(r);
      r.sub_iso_quotient = false;
    }
    return r;
  }

  // chi1 trivial: Ind 1 twisted by chi2 o det.
  const U nu = Q * (Q - 1), sig = (Q - 1) * (Q * Q - Q + 1);
  const bool banal_like = ell == 0 || !divides(ell, (Q - 1) * (Q + 1) * (Q * Q - Q + 1));
  if (banal_like || (ell != 2 && divides(ell, Q - 1))) {
    r.factors = {{finite("triv", "chi2 o det", 1, 1, false), 1}, {finite("St", "chi2 o det", Q * Q * Q, Q * Q * Q, false), 1}};
    r.clause = banal_like ? "ell prime to (q-1)(q+1)(q^2-q+1): 1 + St" : "ell != 2, ell | q-1: 1 + St";
    finish(r);
    semisimple_layer(r);
    r.sub_iso_quotient = false;
    return r;
  }
  if (ell != 3 && divides(ell, Q * Q - Q + 1)) {
    U tp = tau_plus_dim(Q, 1);
    r.factors = {{finite("triv", "chi2 o det", 1, 1, false), 2}, {finite("tau_plus", "chi2", std::nullopt, tp, true), 1}};
    r.clause = "ell != 3, ell | q^2-q+1: uniserial of length three";
    finish(r);
    uniserial_layers(r, {0, 1, 0});
    r.sub_iso_quotient = true;
    r.unique_sub = r.unique_quotient = r.factors[0].first.str();
    return r;
  }
  if ((ell != 2 && ell != 3 && divides(ell, Q + 1)) || (ell == 2 && (Q + 1) % 4 == 0)) {
    r.factors = {{finite("triv", "chi2 o det", 1, 1, false), 2},
                 {finite("nu", "chi2", nu, nu, true), 2},
                 {finite("sigma3", "chi2,chi2,chi2", sig, sig, true), 1}};
    r.clause = "ell | q+1 (ell != 3; 4 | q+1 if ell = 2): uniserial of length five";
    finish(r);
    uniserial_layers(r, {0, 1, 2, 1, 0});
    r.sub_iso_quotient = true;
    r.unique_sub = r.unique_quotient = r.factors[0].first.str();
    r.notes.push_back("maximal cuspidal subquotient uniserial: nu, sigma3, nu");
    return r;
  }
  if (ell == 2 && (Q - 1) % 4 == 0) {
    U tp = tau_plus_dim(Q, 2);
    r.factors = {{finite("triv", "chi2 o det", 1, 1, false), 2},
                 {finite("nu", "chi2", nu, nu, true), 1},
                 {finite("tau_plus", "chi2", std::nullopt, tp, true), 1}};
    r.clause = "ell = 2, 4 | q-1: length four";
    finish(r);
    r.layers = {{{0, 1}}, {{1, 1}, {2, 1}}, {{0, 1}}};
    r.uniserial = false;
    r.semisimple = false;
    r.sub_iso_quotient = true;
    r.unique_sub = r.unique_quotient = r.factors[0].first.str();
    return r;
  }
  fail(ErrorCode::UnsupportedCase, "ell = 3 dividing q+1 with chi1 trivial: decomposition numbers not given");
}

const char* chi1_class_name(Chi1Class c) {
  switch (c) {
    case Chi1Class::Trivial: return "trivial";
    case Chi1Class::DeltaHalf: return "delta_half";
    case Chi1Class::DeltaMinusHalf: return "delta_minus_half";
    case Chi1Class::EtaDeltaQuarter: return "eta_delta_quarter";
    case Chi1Class::EtaDeltaMinusQuarter: return "eta_delta_minus_quarter";
    case Chi1Class::UnitaryPullback: return "unitary_pullback_nontrivial";
    case Chi1Class::RegularOther: return "regular_other";
  }
  return "?";
}

std::optional<Chi1Class> parse_chi1_class(const std::string& s) {
  for (int i = 0; i <= (int)Chi1Class::RegularOther; ++i)
    if (s == chi1_class_name((Chi1Class)i)) return (Chi1Class)i;
  return std::nullopt;
}

bool PadicCharDescriptor::operator==(const PadicCharDescriptor& o) const {
  return level == o.level && chi1 == o.chi1 && chi2_absorbed == o.chi2_absorbed && q == o.q && ell == o.ell;
}

namespace {

bool unramified(Chi1Class c) {
  return c == Chi1Class::Trivial || c == Chi1Class::DeltaHalf || c == Chi1Class::DeltaMinusHalf ||
         c == Chi1Class::EtaDeltaQuarter || c == Chi1Class::EtaDeltaMinusQuarter;
}

// Value at the uniformiser as sign * q^k: delta_B^(1/2) -> q^-2,
// eta delta_B^(1/4) -> -q^-1.
std::pair<int, int> z_value(Chi1Class c) {
  switch (c) {
    case Chi1Class::DeltaMinusHalf: return {1, 2};
    case Chi1Class::DeltaHalf: return {1, -2};
    case Chi1Class::EtaDeltaQuarter: return {-1, -1};
    case Chi1Class::EtaDeltaMinusQuarter: return {-1, 1};
    default: return {1, 0};
  }
}

bool same_value(Chi1Class a, Chi1Class b, std::uint32_t q, std::uint32_t ell) {
  auto [sa, ka] = z_value(a);
  auto [sb, kb] = z_value(b);
  if (ell == 0) return sa == sb && ka == kb;
  // sa q^ka == sb q^kb  <=>  sa q^(ka-kb+4) == sb q^4
  auto f = gf::Field::make(ell, 1);
  gf::Elem qq = f->from_int(q);
  gf::Elem lhs = f->mul(f->from_int(sa), f->pow(qq, ka - kb + 4));
  gf::Elem rhs = f->mul(f->from_int(sb), f->pow(qq, 4));
  return lhs == rhs;
}

void check_descriptor(const PadicCharDescriptor& d) {
  check_q(d.q);
  if (d.ell != 0 && !gf::is_prime(d.ell)) fail(ErrorCode::BadParameters, "ell must be 0 or prime");
  if (d.level == Level::Positive && unramified(d.chi1))
    fail(ErrorCode::BadParameters, "unramified classes have level zero");
}

}  // namespace

PadicCharDescriptor collapse(const PadicCharDescriptor& d) {
  check_descriptor(d);
  PadicCharDescriptor out = d;
  if (!unramified(d.chi1) || (d.ell != 0 && d.q % d.ell == 0)) return out;
  for (auto c : {Chi1Class::DeltaMinusHalf, Chi1Class::DeltaHalf, Chi1Class::EtaDeltaQuarter,
                 Chi1Class::EtaDeltaMinusQuarter, Chi1Class::Trivial})
    if (same_value(c, d.chi1, d.q, d.ell)) {
      out.chi1 = c;
      break;
    }
  return out;
}

Verdict padic_reducibility(const PadicCharDescriptor& desc) {
  auto d = collapse(desc);
  switch (d.chi1) {
    case Chi1Class::DeltaHalf:
    case Chi1Class::DeltaMinusHalf: return {true, 1};
    case Chi1Class::EtaDeltaQuarter:
    case Chi1Class::EtaDeltaMinusQuarter: return {true, 2};
    case Chi1Class::UnitaryPullback: return {true, 3};
    default: return {false, 0};
  }
}

StructureReport padic_ps_structure(const PadicCharDescriptor& desc) {
  auto d = collapse(desc);
  if (d.ell != 0 && d.q % d.ell == 0)
    fail(ErrorCode::UnsupportedCase, "ell = p (defining characteristic) is outside the theory");
  const U Q = d.q;
  const std::uint32_t ell = d.ell;
  StructureReport r;
  r.scope = "padic";
  r.rank = 3;
  r.q = d.q;
  r.ell = ell;
  auto v = padic_reducibility(d);
  const U nu = Q * (Q - 1), sig = (Q - 1) * (Q * Q - Q + 1);

  auto two_noncuspidal = [&](const std::string& clause) {
    r.factors = {{padic("nc", "sub"), 1}, {padic("nc", "quotient"), 1}};
    r.clause = clause;
    finish(r);
    if (ell != 0 && ell != 2 && divides(ell, Q - 1)) {
      r.semisimple = true;
      r.uniserial = false;
      r.notes.push_back("ell != 2, ell | q-1: semisimple");
    }
  };

  if (!v.reducible) {
    r.factors = {{padic("PS", chi1_class_name(desc.chi1)), 1}};
    r.clause = "irreducible";
    finish(r);
    r.uniserial = r.semisimple = true;
    return r;
  }

  if (v.clause == 3) {
    const bool level0 = d.level == Level::Zero;
    if (divides(ell, Q + 1)) {
      Label sub = padic("nc", "sub = quotient");
      if (level0) {
        r.factors = {{sub, 2},
                     {wrap("I_Lambda_x", finite("sigma3", "psi,psi,1", sig, sig, true)), 1},
                     {wrap("I_Lambda_y", finite("sigma_bar", "psi (x) 1", Q - 1, Q - 1, true)), 1}};
        r.clause = "ramified level zero, ell | q+1: length four";
      } else {
        r.factors = {{sub, 2},
                     {wrap("I_kappa_x", finite("sigma_bar", "chi (x) 1", Q - 1, Q - 1, true)), 1},
                     {wrap("I_kappa_y", finite("sigma_bar", "chi (x) 1", Q - 1, Q - 1, true)), 1}};
        r.clause = "positive level, ell | q+1: length four";
      }
      finish(r);
      r.sub_iso_quotient = true;
      r.uniserial = false;
      r.semisimple = false;
      r.unique_sub = r.unique_quotient = sub.str();
      return r;
    }
    two_noncuspidal(level0 ? "ramified level zero, ell does not divide q+1: length two"
                           : "positive level, ell does not divide q+1: length two");
    return r;
  }

  if (v.clause == 2) {
    // Only reached when eta delta^(+-1/4) did not collapse onto delta^(+-1/2),
    // i.e. ell divides neither q+1 nor q^2-q+1.
    two_noncuspidal("eta delta^(1/4) type: length two");
    return r;
  }

  // delta_B^(-1/2), or its contragredient delta_B^(1/2).
  const bool dual = d.chi1 == Chi1Class::DeltaHalf;
  Label one = padic("triv", "1_G"), st = padic("St", "St_G");
  auto orient = [&](const std::string& sub, const std::string& quot) {
    r.unique_sub = dual ? quot : sub;
    r.unique_quotient = dual ? sub : quot;
  };
  if (dual) r.notes.push_back("contragredient of the delta_B^(-1/2) case: sub and quotient exchanged");
  const bool banal = ell == 0 || !divides(ell, (Q - 1) * (Q + 1) * (Q * Q - Q + 1));
  if (banal) {
    r.factors = {{one, 1}, {st, 1}};
    r.clause = "urprincipal (1): ell prime to (q-1)(q+1)(q^2-q+1), length two";
    finish(r);
    if (divides(ell, Q * Q + 1)) {
      // delta_B(w) = q^-4 = 1 mod ell, so 1_G is also a quotient (second
      // adjunction) and the extension splits.
      r.uniserial = false;
      r.semisimple = true;
      r.sub_iso_quotient = false;
      r.notes.push_back("ell | q^2+1: delta_B is trivial mod ell, 1_G is both sub and quotient, so 1_G + St_G splits");
      return r;
    }
    r.uniserial = true;
    r.semisimple = false;
    r.sub_iso_quotient = false;
    orient(one.str(), st.str());
    return r;
  }
  if (ell != 2 && divides(ell, Q - 1)) {
    r.factors = {{one, 1}, {st, 1}};
    r.clause = "urprincipal (2): ell != 2, ell | q-1, semisimple";
    finish(r);
    r.uniserial = false;
    r.semisimple = true;
    r.sub_iso_quotient = false;
    return r;
  }
  if (ell != 3 && divides(ell, Q * Q - Q + 1)) {
    Label nug = padic("nu_G", "not a character");
    r.factors = {{one, 1}, {wrap("I_Lambda_x", finite("tau_plus", "1", std::nullopt, tau_plus_dim(Q, 1), true)), 1},
                 {nug, 1}};
    r.clause = "urprincipal (3): ell != 3, ell | q^2-q+1, length three";
    finish(r);
    r.uniserial = true;
    r.semisimple = false;
    r.sub_iso_quotient = false;
    orient(one.str(), nug.str());
    return r;
  }
  if ((ell != 2 && ell != 3 && divides(ell, Q + 1)) || (ell == 2 && (Q + 1) % 4 == 0)) {
    r.factors = {{one, 2},
                 {wrap("I_Lambda_x", finite("nu", "1", nu, nu, true)), 2},
                 {wrap("I_Lambda_x", finite("sigma3", "1", sig, sig, true)), 1},
                 {wrap("I_Lambda_y", finite("sigma_bar", "1 (x) 1", Q - 1, Q - 1, true)), 1}};
    r.clause = "urprincipal (4): ell | q+1 (ell != 2, 3) or ell = 2 with 4 | q+1, length six";
    finish(r);
    r.uniserial = false;
    r.semisimple = false;
    r.sub_iso_quotient = true;
    orient(one.str(), one.str());
    r.notes.push_back(
        "maximal proper submodule of St_G: rho + I_Lambda_y(sigma_bar(1) (x) 1), rho of length three with "
        "unique sub and quotient I_Lambda_x(nu(1)) and middle I_Lambda_x(sigma3(1))");
    return r;
  }
  if (ell == 2 && (Q - 1) % 4 == 0) {
    r.factors = {{one, 2},
                 {wrap("I_Lambda_x", finite("nu", "1", nu, nu, true)), 1},
                 {wrap("I_Lambda_x", finite("tau_plus", "1", std::nullopt, tau_plus_dim(Q, 2), true)), 1},
                 {wrap("I_Lambda_y", finite("sigma_bar", "1 (x) 1", Q - 1, Q - 1, true)), 1}};
    r.clause = "urprincipal (5): ell = 2, 4 | q-1, length five";
    finish(r);
    r.uniserial = false;
    r.semisimple = false;
    r.sub_iso_quotient = true;
    orient(one.str(), one.str());
    r.notes.push_back(
        "maximal proper submodule of St_G: I_Lambda_x(nu(1)) + I_Lambda_x(tau_plus(1)) + I_Lambda_y(sigma_bar(1) (x) 1)");
    return r;
  }
  fail(ErrorCode::UnsupportedCase, "ell = 3 dividing q+1: not covered by the decomposition theorem");
}

FiniteObservation observe(const grp::GroupSpec& g, const meataxe::CompositionReport& r) {
  FiniteObservation o;
  o.rank = g.rank;
  o.q = g.q0;
  o.ell = r.field->characteristic();
  std::vector<std::size_t> unipotent;
  for (std::size_t i = 0; i < g.generator_names.size(); ++i)
    if (g.generator_names[i].rfind("root", 0) == 0) unipotent.push_back(i);
  for (const auto& fe : r.factors) {
    const auto& m = r.representatives[fe.id].module;
    if (m.gens.size() != g.generators.size())
      fail(ErrorCode::MismatchedParameters, "module generators do not match the group generators");
    // v fixed by N  <=>  v (u - 1) = 0 for the root generators u
    linalg::Matrix stack(m.field, m.dim, m.dim * unipotent.size());
    for (std::size_t k = 0; k < unipotent.size(); ++k) {
      const auto& u = m.gens[unipotent[k]];
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
          gf::Elem x = u(i, j);
          if (i == j) x = m.field->sub(x, 1);
          stack(i, k * m.dim + j) = x;
        }
    }
    o.factors.push_back({fe.dim, fe.multiplicity, linalg::left_nullspace(stack).rows() == 0});
  }
  return o;
}

PadicCharDescriptor descriptor_for_finite(std::uint32_t q, std::uint32_t ell, std::int64_t e1, std::int64_t e2) {
  check_q(q);
  (void)e2;
  PadicCharDescriptor d;
  d.q = q;
  d.ell = ell;
  d.level = Level::Zero;
  const U ord1 = chi1_order(q, ell, e1);
  if (ord1 == 1)
    d.chi1 = Chi1Class::DeltaMinusHalf;  // the reducible unramified twist
  else if ((U)(q + 1) % ord1 == 0)
    d.chi1 = Chi1Class::UnitaryPullback;
  else
    d.chi1 = Chi1Class::RegularOther;
  return d;
}

namespace {

using DimCount = std::map<U, std::size_t>;

void add_predicted(const Label& l, std::size_t mult, DimCount& x, DimCount& y) {
  if (l.inner.empty()) return;
  U dim = l.inner[0].dim_mod.value_or(0);
  bool is_x = l.kind == "I_Lambda_x" || l.kind == "I_kappa_x";
  (is_x ? x : y)[dim] += mult;
}

void compare_side(const char* side, const DimCount& predicted, const FiniteObservation& obs,
                  std::vector<std::string>& problems) {
  DimCount seen;
  for (const auto& f : obs.factors)
    if (f.cuspidal) seen[f.dim] += f.multiplicity;
  for (auto [dim, m] : predicted) {
    auto it = seen.find(dim);
    std::size_t have = it == seen.end() ? 0 : it->second;
    if (have < m)
      problems.push_back(std::string(side) + ": predicted cuspidal of dim " + std::to_string(dim) + " x" +
                         std::to_string(m) + ", observed x" + std::to_string(have));
  }
  for (auto [dim, m] : seen)
    if (!predicted.count(dim))
      problems.push_back(std::string(side) + ": unpredicted cuspidal factor of dim " + std::to_string(dim) + " x" +
                         std::to_string(m));
}

}  // namespace

BridgeResult bridge_check(const PadicCharDescriptor& d, const FiniteObservation& x, const FiniteObservation& y) {
  if (x.rank != 3 || y.rank != 2) fail(ErrorCode::MismatchedParameters, "expected U(2,1) and U(1,1) observations");
  if (x.q != d.q || y.q != d.q || x.ell != d.ell || y.ell != d.ell)
    fail(ErrorCode::MismatchedParameters, "q or ell of the observations differ from the descriptor");
  if (d.level != Level::Zero) fail(ErrorCode::MismatchedParameters, "the finite bridge needs a level-zero descriptor");
  auto p = padic_ps_structure(d);
  DimCount px, py;
  for (const auto& [l, m] : p.factors) add_predicted(l, m, px, py);
  BridgeResult out;
  compare_side("Lambda_x", px, x, out.problems);
  compare_side("Lambda_y", py, y, out.problems);
  out.ok = out.problems.empty();
  return out;
}

std::vector<std::string> compare_finite(const StructureReport& predicted, const FiniteObservation& obs,
                                        const meataxe::SocleReport* socle) {
  std::vector<std::string> diffs;
  using Key = std::tuple<U, bool>;
  std::map<Key, std::size_t> want, have;
  for (const auto& [l, m] : predicted.factors) want[{l.dim_mod.value_or(0), l.cuspidal}] += m;
  for (const auto& f : obs.factors) have[{f.dim, f.cuspidal}] += f.multiplicity;
  auto show = [](const std::map<Key, std::size_t>& s) {
    std::string out;
    for (const auto& [k, m] : s)
      out += (out.empty() ? "" : ", ") + std::to_string(std::get<0>(k)) + (std::get<1>(k) ? "c" : "") + "x" +
             std::to_string(m);
    return "{" + out + "}";
  };
  if (want != have) diffs.push_back("factors: predicted " + show(want) + ", observed " + show(have));
  if (!socle) return diffs;
  if (!predicted.layers.empty()) {
    auto dims_of = [](const std::vector<std::pair<int, std::size_t>>& layer, auto dim_of) {
      std::vector<U> d;
      for (auto [id, m] : layer)
        for (std::size_t k = 0; k < m; ++k) d.push_back(dim_of(id));
      std::sort(d.begin(), d.end());
      return d;
    };
    std::vector<std::vector<U>> pl, ol;
    for (const auto& l : predicted.layers)
      pl.push_back(dims_of(l, [&](int id) { return predicted.factors[id].first.dim_mod.value_or(0); }));
    for (const auto& l : socle->layers)
      ol.push_back(dims_of(l, [&](int id) { return (U)socle->composition.factors[id].dim; }));
    if (pl != ol) diffs.push_back("socle layers differ");
  }
  if (predicted.uniserial && *predicted.uniserial != socle->uniserial) diffs.push_back("uniserial flag differs");
  if (predicted.semisimple && *predicted.semisimple != socle->semisimple) diffs.push_back("semisimple flag differs");
  return diffs;
}

}  // namespace u21::classify
