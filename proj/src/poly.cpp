// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/poly.hpp"

#include <algorithm>

namespace u21::gf::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i]) return (int)i;
  return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.add(c[i], b[i]);
  trim(c);
  return c;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  trim(c);
  return c;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  int db = degree(b);
  if (db < 0) fail(ErrorCode::ZeroArgument, "polynomial division by zero");
  r = a;
  trim(r);
  int dr = degree(r);
  q.assign(dr >= db ? dr - db + 1 : 0, 0);
  Elem lead_inv = f.inv(b[db]);
  while ((dr = degree(r)) >= db) {
    Elem c = f.mul(r[dr], lead_inv);
    std::size_t shift = dr - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
    trim(r);
  }
  trim(q);
}

Poly mod(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(f, a, b, q, r);
  return r;
}

Poly monic(const Field& f, const Poly& a) {
  Poly c = a;
  trim(c);
  if (c.empty()) return c;
  Elem s = f.inv(c.back());
  for (Elem& x : c) x = f.mul(x, s);
  return c;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly r{1};
  r = mod(f, r, m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) r = mod(f, mul(f, r, base), m);
    e >>= 1;
    if (e) base = mod(f, mul(f, base, base), m);
  }
  return r;
}

Elem eval(const Field& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

Poly charpoly(const linalg::Matrix& a) {
  const Field& f = a.F();
  const std::size_t n = a.rows();
  linalg::Matrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Elem pinv = f.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      Elem u = f.mul(h(r, m - 1), pinv);
      if (!u) continue;
      Elem nu = f.neg(u);
      for (std::size_t j = 0; j < n; ++j)
        if (h(m, j)) h(r, j) = f.add(h(r, j), f.mul(nu, h(m, j)));
      for (std::size_t j = 0; j < n; ++j)
        if (h(j, r)) h(j, m) = f.add(h(j, m), f.mul(u, h(j, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly t(k + 1, 0);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) t[i + 1] = p[k - 1][i];
    Elem hkk = h(k - 1, k - 1);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) t[i] = f.sub(t[i], f.mul(hkk, p[k - 1][i]));
    Elem prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h(i, i - 1));
      if (!prod) break;
      Elem c = f.mul(h(i - 1, k - 1), prod);
      if (c)
        for (std::size_t j = 0; j < p[i - 1].size(); ++j) t[j] = f.sub(t[j], f.mul(c, p[i - 1][j]));
    }
    p[k] = std::move(t);
  }
  Poly out = p[n];
  out.resize(n + 1, 0);
  return out;
}

linalg::Matrix eval_matrix(const Poly& pol, const linalg::Matrix& a) {
  const Field& f = a.F();
  const std::size_t n = a.rows();
  linalg::Matrix r(a.field(), n, n);
  int d = degree(pol);
  if (d < 0) return r;
  for (std::size_t i = 0; i < n; ++i) r(i, i) = pol[d];
  for (int k = d - 1; k >= 0; --k) {
    r = r * a;
    if (pol[k])
      for (std::size_t i = 0; i < n; ++i) r(i, i) = f.add(r(i, i), pol[k]);
  }
  return r;
}

namespace {

Poly random_poly(const Field& f, std::size_t len, std::mt19937_64& rng) {
  Poly a(len);
  for (auto& c : a) c = (Elem)(rng() % f.order());
  trim(a);
  return a;
}

// Splits a squarefree product of distinct degree-d irreducibles.
void equal_degree(const Field& f, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  int n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t Q = f.order();
  for (;;) {
    Poly a = random_poly(f, (std::size_t)n, rng);
    if (degree(a) < 1) continue;
    Poly b;
    if (f.characteristic() == 2) {
      Poly t = a, acc = a;
      for (std::uint32_t i = 1; i < f.degree() * (std::uint32_t)d; ++i) {
        t = mod(f, mul(f, t, t), g);
        acc = add(f, acc, t);
      }
      b = acc;
    } else {
      Poly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = powmod(f, t, Q, g);
        acc = mod(f, mul(f, acc, t), g);
      }
      b = sub(f, powmod(f, acc, (Q - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(f, g, b);
    int dh = degree(h);
    if (dh > 0 && dh < n) {
      Poly q, r;
      divmod(f, g, h, q, r);
      equal_degree(f, h, d, rng, out);
      equal_degree(f, monic(f, q), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> irreducible_factors(const Field& f, const Poly& a, std::mt19937_64& rng, int max_degree) {
  std::vector<Poly> out;
  Poly rest = monic(f, a);
  if (degree(rest) < 1) return out;
  const std::uint64_t Q = f.order();
  Poly x{0, 1};
  Poly h = mod(f, x, rest);
  for (int d = 1; degree(rest) >= 2 * d; ++d) {
    h = powmod(f, h, Q, rest);
    Poly g = gcd(f, rest, sub(f, h, x));
    if (degree(g) > 0) {
      if (d <= max_degree) equal_degree(f, g, d, rng, out);
      for (;;) {
        Poly g2 = gcd(f, rest, g);
        if (degree(g2) <= 0) break;
        Poly q, r;
        divmod(f, rest, g2, q, r);
        rest = monic(f, q);
      }
      if (degree(rest) < 1) break;
      h = mod(f, h, rest);
    }
  }
  if (degree(rest) >= 1 && degree(rest) <= max_degree) out.push_back(rest);
  std::sort(out.begin(), out.end(), [](const Poly& u, const Poly& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  });
  return out;
}

}  // namespace u21::gf::poly
