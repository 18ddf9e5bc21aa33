// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/grp.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace u21::grp {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1000000;

GMat antidiag(int n) {
  GMat m;
  m.n = (std::uint8_t)n;
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

// Unipotent [[1, x, y], [0, 1, -conj(x)], [0, 0, 1]].
GMat unipotent3(const GroupSpec& g, Elem x, Elem y) {
  const gf::Field& f = *g.field;
  GMat m = identity(3);
  m(0, 1) = x;
  m(0, 2) = y;
  m(1, 2) = f.neg(g.conj(x));
  return m;
}

}  // namespace

GMat identity(int n) {
  GMat m;
  m.n = (std::uint8_t)n;
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GMat diag(std::initializer_list<Elem> d) {
  GMat m;
  m.n = (std::uint8_t)d.size();
  int i = 0;
  for (Elem x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

GMat mul(const gf::Field& f, const GMat& x, const GMat& y) {
  GMat z;
  z.n = x.n;
  const int n = x.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem s = 0;
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(x(i, k), y(k, j)));
      z(i, j) = s;
    }
  return z;
}

GMat conj(const GroupSpec& g, const GMat& m) {
  GMat c = m;
  for (int k = 0; k < m.n * m.n; ++k) c.a[k] = g.conj(m.a[k]);
  return c;
}

GMat conj_transpose(const GroupSpec& g, const GMat& m) {
  GMat c;
  c.n = m.n;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) c(i, j) = g.conj(m(j, i));
  return c;
}

bool is_unitary(const GroupSpec& g, const GMat& m) {
  if (m.n != g.rank) return false;
  const gf::Field& f = *g.field;
  GMat t = mul(f, mul(f, mul(f, m, g.form), conj_transpose(g, m)), g.form);
  return t == identity(g.rank);
}

GMat inverse(const GroupSpec& g, const GMat& m) {
  const gf::Field& f = *g.field;
  return mul(f, mul(f, g.form, conj_transpose(g, m)), g.form);
}

GroupSpec make_group(std::uint32_t q0, int rank) {
  std::uint32_t p = 0, m = 0;
  if (!gf::prime_power(q0, p, m) || p == 2)
    fail(ErrorCode::BadParameters, "q0 must be an odd prime power, got " + std::to_string(q0));
  if (rank != 2 && rank != 3) fail(ErrorCode::BadParameters, "rank must be 2 or 3");
  if (gf::ipow(q0, 2) > gf::Field::kMaxOrder) fail(ErrorCode::FieldTooLarge, "q0^2 exceeds the table limit");
  GroupSpec g;
  g.rank = rank;
  g.q0 = q0;
  g.field = gf::Field::make(p, 2 * m);
  g.conj_power = m;
  g.form = antidiag(rank);
  const gf::Field& f = *g.field;
  const Elem gen = f.primitive();
  // Nonzero trace-zero element: conj(d) = -d.
  const Elem delta = f.exp((q0 + 1) / 2);
  const Elem half = f.inv(f.from_int(2));
  if (rank == 3) {
    g.generators.push_back(diag({gen, 1, f.inv(g.conj(gen))}));
    g.generator_names.push_back("torus");
    for (Elem x : {Elem{1}, gen}) {
      Elem y = f.neg(f.mul(half, f.mul(x, g.conj(x))));
      g.generators.push_back(unipotent3(g, x, y));
      g.generator_names.push_back("root(x=" + std::to_string(x) + ")");
    }
    g.generators.push_back(unipotent3(g, 0, delta));
    g.generator_names.push_back("root-center");
  } else {
    g.generators.push_back(diag({gen, f.inv(g.conj(gen))}));
    g.generator_names.push_back("torus");
    GMat u = identity(2);
    u(0, 1) = delta;
    g.generators.push_back(u);
    g.generator_names.push_back("root");
  }
  g.generators.push_back(antidiag(rank));
  g.generator_names.push_back("weyl");
  for (const auto& x : g.generators)
    if (!is_unitary(g, x)) fail(ErrorCode::Internal, "generator is not unitary");
  return g;
}

std::uint64_t group_order_formula(std::uint32_t q0, int rank) {
  const std::uint64_t q = q0;
  if (rank == 3) return q * q * q * (q - 1) * (q + 1) * (q + 1) * (q + 1) * (q * q - q + 1);
  return q * (q - 1) * (q + 1) * (q + 1);
}

std::uint64_t special_unitary_order_rank2(std::uint32_t q0) {
  const std::uint64_t q = q0;
  return q * (q - 1) * (q + 1);
}

std::vector<GMat> enumerate(const GroupSpec& g) {
  if (group_order_formula(g.q0, g.rank) > kEnumerationLimit)
    fail(ErrorCode::EnumerationTooLarge, "group too large to enumerate");
  const gf::Field& f = *g.field;
  std::unordered_set<GMat, GMatHash> seen;
  std::vector<GMat> out;
  std::deque<GMat> queue;
  GMat e = identity(g.rank);
  seen.insert(e);
  out.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    GMat x = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      GMat y = mul(f, x, s);
      if (seen.insert(y).second) {
        if (out.size() >= 2 * kEnumerationLimit) fail(ErrorCode::EnumerationTooLarge, "closure exceeded limit");
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

std::uint64_t group_order(const GroupSpec& g, OrderMethod method) {
  if (method == OrderMethod::Formula) return group_order_formula(g.q0, g.rank);
  return enumerate(g).size();
}

bool borel_membership(const GroupSpec& g, const GMat& m, std::array<Elem, 3>* diag_out) {
  if (!is_unitary(g, m)) fail(ErrorCode::NotInGroup, "matrix is not unitary");
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j)) return false;
  if (diag_out) {
    diag_out->fill(0);
    for (int i = 0; i < m.n; ++i) (*diag_out)[i] = m(i, i);
  }
  return true;
}

std::uint64_t line_key(const std::array<Elem, 3>& v) {
  return ((std::uint64_t)v[0] << 42) | ((std::uint64_t)v[1] << 21) | v[2];
}

std::size_t FlagTable::find(const std::array<Elem, 3>& v) const {
  auto it = index.find(line_key(v));
  if (it == index.end()) fail(ErrorCode::NotIsotropic, "vector does not span an isotropic line");
  return it->second;
}

FlagTable flag_table(const GroupSpec& g) {
  const gf::Field& f = *g.field;
  const Elem Q = f.order();
  FlagTable t;
  t.rank = g.rank;
  const GMat w = g.form;
  if (g.rank == 3) {
    for (Elem a = 0; a < Q; ++a) {
      Elem na = f.mul(a, g.conj(a));
      for (Elem b = 0; b < Q; ++b) {
        if (f.add(f.add(b, g.conj(b)), na) != 0) continue;
        t.lines.push_back({1, a, b});
        GMat u = identity(3);
        u(0, 1) = f.neg(g.conj(a));
        u(0, 2) = b;
        u(1, 2) = a;  // -conj(-conj(a))
        t.sections.push_back(mul(f, mul(f, w, u), w));
      }
    }
    t.lines.push_back({0, 0, 1});
  } else {
    for (Elem s = 0; s < Q; ++s) {
      if (f.add(s, g.conj(s)) != 0) continue;
      t.lines.push_back({1, s, 0});
      GMat m = identity(2);
      m(1, 0) = s;
      t.sections.push_back(m);
    }
    t.lines.push_back({0, 1, 0});
  }
  t.sections.push_back(w);
  for (std::size_t i = 0; i < t.lines.size(); ++i) {
    t.index[line_key(t.lines[i])] = i;
    if (!is_unitary(g, t.sections[i])) fail(ErrorCode::Internal, "section is not unitary");
    t.section_inverses.push_back(inverse(g, t.sections[i]));
  }
  return t;
}

CosetStep coset_action(const GroupSpec& g, const FlagTable& t, const GMat& m, std::size_t i) {
  const gf::Field& f = *g.field;
  const int n = g.rank;
  const auto& line = t.lines.at(i);
  std::array<Elem, 3> v{0, 0, 0};
  for (int k = 0; k < n; ++k) {
    Elem s = 0;
    for (int l = 0; l < n; ++l) s = f.add(s, f.mul(m(k, l), line[l]));
    v[k] = s;
  }
  int lead = 0;
  while (lead < n && v[lead] == 0) ++lead;
  if (lead == n) fail(ErrorCode::NotInGroup, "singular matrix");
  Elem s = f.inv(v[lead]);
  for (int k = 0; k < n; ++k) v[k] = f.mul(v[k], s);
  std::size_t j = t.find(v);
  GMat b = mul(f, mul(f, t.section_inverses[j], m), t.sections[i]);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < r; ++c)
      if (b(r, c)) fail(ErrorCode::NotInGroup, "coset representative is not in the Borel subgroup");
  return {j, b};
}

}  // namespace u21::grp
