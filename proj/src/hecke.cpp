// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/hecke.hpp"

#include <algorithm>
#include <deque>

namespace u21::hecke {

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* collapse_name(Collapse c) {
  switch (c) {
    case Collapse::Distinct: return "distinct";
    case Collapse::Pairs: return "two";
    case Collapse::Unique: return "unique";
  }
  return "?";
}

std::int64_t reduce(std::int64_t x, std::uint32_t ell) {
  if (ell == 0) return x;
  std::int64_t r = x % (std::int64_t)ell;
  return r < 0 ? r + ell : r;
}

namespace {

std::uint32_t validate(std::uint32_t q, std::uint32_t ell) {
  std::uint32_t p = 0, m = 0;
  if (q < 3 || !gf::prime_power(q, p, m) || p == 2)
    fail(ErrorCode::BadParameters, "q must be an odd prime power, got " + std::to_string(q));
  if (ell != 0 && !gf::is_prime(ell)) fail(ErrorCode::BadParameters, "ell must be 0 or prime");
  if (ell == p) fail(ErrorCode::BadParameters, "ell equals the characteristic of q");
  return p;
}

}  // namespace

HeckePresentation presentation(std::uint32_t q, int a, std::uint32_t ell) {
  validate(q, ell);
  if (a != 1 && a != 3) fail(ErrorCode::BadParameters, "a must be 1 or 3");
  const std::int64_t qa = (std::int64_t)gf::ipow(q, (unsigned)a);
  HeckePresentation p;
  p.params = {q, a, ell};
  p.rel_x = {"f_x", reduce(qa - 1, ell), reduce(qa, ell)};
  p.rel_y = {"f_y", reduce((std::int64_t)q - 1, ell), reduce(q, ell)};
  p.fx_at_one = a == 3 ? Rational{1, 1} : Rational{1, (std::int64_t)q};
  p.fy_at_one = {1, 1};
  return p;
}

std::vector<HeckeCharacter> characters(const HeckePresentation& p) {
  const auto ell = p.params.ell;
  const std::int64_t qa = p.rel_x.c0, qq = p.rel_y.c0, m1 = reduce(-1, ell);
  const std::vector<HeckeCharacter> table{
      {"Xi_sgn", {}, m1, m1}, {"Xi_ind", {}, qa, qq}, {"Xi_1", {}, qa, m1}, {"Xi_2", {}, m1, qq}};
  std::vector<HeckeCharacter> out;
  for (const auto& c : table) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const HeckeCharacter& o) { return o.value_x == c.value_x && o.value_y == c.value_y; });
    if (it == out.end())
      out.push_back(c);
    else
      it->aliases.push_back(c.name);
  }
  return out;
}

Collapse collapse_case(const HeckePresentation& p) {
  const auto ell = p.params.ell;
  const std::int64_t m1 = reduce(-1, ell);
  if (p.rel_y.c0 == m1) return Collapse::Unique;
  if (p.rel_x.c0 == m1) return Collapse::Pairs;
  return Collapse::Distinct;
}

std::string LaurentAlgebra::description() const {
  return "R[X, X^-1] over " + (ell ? "GF(" + std::to_string(ell) + ")-bar" : std::string("Q_ell-bar")) +
         ": one character per invertible scalar";
}

std::int64_t LaurentAlgebra::character(std::int64_t x) const {
  std::int64_t r = reduce(x, ell);
  if (r == 0) fail(ErrorCode::ZeroArgument, "X is invertible; it cannot act by 0");
  return r;
}

LaurentAlgebra characters_regular(std::uint32_t q, std::uint32_t ell) {
  validate(q, ell);
  return {q, ell};
}

std::uint32_t FiniteGroup::mul(std::uint32_t x, std::uint32_t y) const {
  return find(grp::mul(*spec.field, elements[x], elements[y]));
}

std::uint32_t FiniteGroup::find(const grp::GMat& m) const {
  auto it = index.find(m);
  if (it == index.end()) fail(ErrorCode::NotInGroup, "matrix is not in the enumerated group");
  return it->second;
}

std::shared_ptr<const FiniteGroup> enumerate_group(const grp::GroupSpec& g) {
  auto out = std::make_shared<FiniteGroup>();
  out->spec = g;
  out->elements = grp::enumerate(g);
  out->index.reserve(out->elements.size() * 2);
  for (std::uint32_t i = 0; i < out->elements.size(); ++i) out->index.emplace(out->elements[i], i);
  out->identity = out->find(grp::identity(g.rank));
  out->inverse.resize(out->elements.size());
  for (std::uint32_t i = 0; i < out->elements.size(); ++i)
    out->inverse[i] = out->find(grp::inverse(g, out->elements[i]));
  return out;
}

std::shared_ptr<const Subgroup> make_subgroup(const FiniteGroup& g, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || g.order() % members.size() != 0)
    fail(ErrorCode::InvalidArgument, "subgroup order does not divide the group order");
  auto s = std::make_shared<Subgroup>();
  s->members = std::move(members);
  s->coset_of.assign(g.order(), UINT32_MAX);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (s->coset_of[x] != UINT32_MAX) continue;
    const std::uint32_t c = (std::uint32_t)s->coset_reps.size();
    s->coset_reps.push_back(x);
    for (auto k : s->members) {
      std::uint32_t y = g.mul(x, k);
      if (s->coset_of[y] != UINT32_MAX) fail(ErrorCode::InvalidArgument, "members do not form a subgroup");
      s->coset_of[y] = c;
    }
  }
  return s;
}

std::shared_ptr<const Subgroup> borel_subgroup(const FiniteGroup& g) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (grp::borel_membership(g.spec, g.elements[x], nullptr)) members.push_back(x);
  return make_subgroup(g, std::move(members));
}

BiFunction double_coset_indicator(std::shared_ptr<const FiniteGroup> g, std::shared_ptr<const Subgroup> k,
                                  gf::FieldPtr field, std::uint32_t x, gf::Elem value) {
  BiFunction f{g, k, field, std::vector<gf::Elem>(g->order(), 0)};
  for (auto a : k->members) {
    std::uint32_t ax = g->mul(a, x);
    for (auto b : k->members) f.values[g->mul(ax, b)] = value;
  }
  return f;
}

BiFunction convolve(const BiFunction& f1, const BiFunction& f2) {
  if (f1.group != f2.group) fail(ErrorCode::SubgroupMismatch, "functions live on different groups");
  if (f1.sub != f2.sub && f1.sub->members != f2.sub->members)
    fail(ErrorCode::SubgroupMismatch, "functions are invariant under different subgroups");
  if (!f1.field->same_as(*f2.field)) fail(ErrorCode::FieldMismatch, "coefficient fields differ");
  const auto& g = *f1.group;
  const auto& f = *f1.field;
  BiFunction out{f1.group, f1.sub, f1.field, std::vector<gf::Elem>(g.order(), 0)};
  std::vector<std::uint32_t> support;
  for (auto r : f1.sub->coset_reps)
    if (f1.at(r)) support.push_back(r);
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    gf::Elem s = 0;
    for (auto r : support) {
      gf::Elem v = f2.at(g.mul(g.inverse[r], h));
      if (v) s = f.add(s, f.mul(f1.at(r), v));
    }
    out.values[h] = s;
  }
  return out;
}

}  // namespace u21::hecke
