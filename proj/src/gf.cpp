// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/gf.hpp"

#include <map>
#include <mutex>

namespace u21::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool prime_power(std::uint64_t n, std::uint32_t& p, std::uint32_t& m) {
  if (n < 2) return false;
  auto f = prime_factors(n);
  if (f.size() != 1) return false;
  p = static_cast<std::uint32_t>(f[0]);
  m = 0;
  while (n > 1) {
    n /= p;
    ++m;
  }
  return true;
}

namespace {

// Remainder of a by the monic b over GF(p); both little-endian.
std::vector<std::uint32_t> prime_poly_rem(std::vector<std::uint32_t> a,
                                          const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint64_t t = (std::uint64_t)lead * b[i] % p;
        a[shift + i] = (std::uint32_t)((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> low) {
  const std::size_t m = low.size();
  if (m == 0) return false;
  if (m == 1) return true;
  std::vector<std::uint32_t> f(low.begin(), low.end());
  f.push_back(1);
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = ipow(p, (unsigned)d);
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = (std::uint32_t)(t % p);
        t /= p;
      }
      g[d] = 1;
      auto r = prime_poly_rem(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
  if (!gf::is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) fail(ErrorCode::InvalidArgument, "field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^20");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  std::vector<std::uint32_t> low(m);
  for (std::uint64_t v = 0; v < q; ++v) {
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < m; ++i) {
      low[i] = (std::uint32_t)(t % p);
      t /= p;
    }
    if (is_irreducible(p, low)) break;
  }
  FieldPtr f(new Field(p, m, low));
  cache[{p, m}] = f;
  return f;
}

FieldPtr Field::from_modulus(std::uint32_t p, std::vector<std::uint32_t> low) {
  if (!gf::is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (low.empty()) fail(ErrorCode::InvalidArgument, "empty modulus");
  for (auto c : low)
    if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  auto canonical = make(p, (std::uint32_t)low.size());
  if (canonical->modulus() == low) return canonical;
  if (!is_irreducible(p, low)) fail(ErrorCode::InvalidArgument, "modulus is reducible");
  return FieldPtr(new Field(p, (std::uint32_t)low.size(), std::move(low)));
}

Elem Field::slow_mul(Elem a, Elem b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)ca[i] * cb[j]) % p_);
  std::vector<std::uint32_t> mod(modulus_);
  mod.push_back(1);
  auto r = prime_poly_rem(prod, mod, p_);
  r.resize(m_, 0);
  return from_coefficients(r);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> low)
    : p_(p), m_(m), q_((std::uint32_t)ipow(p, m)), modulus_(std::move(low)) {
  const std::uint32_t n = q_ - 1;
  auto factors = prime_factors(n);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Elem c = 1; c < q_; ++c) {
    bool ok = true;
    for (auto r : factors) ok = ok && slow_pow(c, n / r) != 1;
    if (ok) {
      gen_ = c;
      break;
    }
  }
  exp_.assign(2 * (std::size_t)n, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = exp_[k + n] = x;
    log_[x] = k;
    x = slow_mul(x, gen_);
  }
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    auto c = coefficients(a);
    for (auto& d : c) d = (p_ - d) % p_;
    neg_[a] = from_coefficients(c);
  }
  // Zech table: 1 + g^k, computed digitwise.
  zech_.assign(n, -1);
  for (std::uint32_t k = 0; k < n; ++k) {
    auto c = coefficients(exp_[k]);
    c[0] = (c[0] + 1) % p_;
    Elem s = from_coefficients(c);
    zech_[k] = s == 0 ? -1 : (std::int32_t)log_[s];
  }
  if (p_ != 2 && m_ > 1 && q_ <= 256) {
    add_.resize((std::size_t)q_ * q_);
    for (Elem a = 0; a < q_; ++a) {
      auto ca = coefficients(a);
      for (Elem b = 0; b < q_; ++b) {
        auto cb = coefficients(b);
        for (std::uint32_t i = 0; i < m_; ++i) cb[i] = (cb[i] + ca[i]) % p_;
        add_[a * q_ + b] = from_coefficients(cb);
      }
    }
  }
}

Elem Field::zech_add(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = q_ - 1;
  std::uint32_t la = log_[a], lb = log_[b];
  std::int32_t z = zech_[(lb + n - la) % n];
  if (z < 0) return 0;
  return exp_[(la + (std::uint32_t)z) % n];
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::ZeroArgument, "inverse of zero");
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorCode::ZeroArgument, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t k = ((std::int64_t)log_[a] * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

Elem Field::frobenius(Elem x, std::uint32_t k) const {
  if (x == 0) return 0;
  const std::uint64_t n = q_ - 1;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % m_; ++i) e = e * p_ % n;
  return exp_[(log_[x] * e) % n];
}

std::uint32_t Field::dlog(Elem x) const {
  if (x == 0) fail(ErrorCode::ZeroArgument, "discrete log of zero");
  if (x >= q_) fail(ErrorCode::InvalidArgument, "element code out of range");
  return log_[x];
}

Elem Field::from_int(std::int64_t k) const {
  std::int64_t r = k % (std::int64_t)p_;
  if (r < 0) r += p_;
  return (Elem)r;
}

Elem Field::root_of_unity(std::uint64_t n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    fail(ErrorCode::NoSuchRoot, "no primitive " + std::to_string(n) + "-th root of unity in " + name());
  return exp_[(q_ - 1) / n];
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> c) const {
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
  return a;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace u21::gf
