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
#include <span>
#include <string>
#include <vector>

#include "u21/error.hpp"

namespace u21::gf {

// Field elements are packed codes sum c_i p^i over the polynomial basis
// 1, x, ..., x^{m-1}. Code 0 is zero and code 1 is one.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // GF(p^m) with the lowest irreducible monic modulus (codes of the low
  // coefficients compared as integers). Instances are cached per (p, m).
  static FieldPtr make(std::uint32_t p, std::uint32_t m);
  // GF(p^m) for an explicit modulus x^m + c_{m-1} x^{m-1} + ... + c_0.
  static FieldPtr from_modulus(std::uint32_t p, std::vector<std::uint32_t> low);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive() const { return gen_; }
  bool is_prime() const { return m_ == 1; }
  std::string name() const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_.empty()) return add_[a * q_ + b];
    return zech_add(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // x -> x^(p^k).
  Elem frobenius(Elem x, std::uint32_t k) const;
  // Discrete log to base primitive(); throws ZeroArgument on 0.
  std::uint32_t dlog(Elem x) const;
  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  Elem from_int(std::int64_t k) const;
  // Primitive n-th root g^((order-1)/n); NoSuchRoot unless n | order-1.
  Elem root_of_unity(std::uint64_t n) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> c) const;

  bool same_as(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> low);
  Elem zech_add(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  Elem gen_ = 0;
  std::vector<Elem> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::int32_t> zech_;   // log(1 + g^k), -1 when zero
  std::vector<Elem> neg_;
  std::vector<Elem> add_;            // only for small extension fields
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Trial-division irreducibility test of x^m + sum low[i] x^i over GF(p).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> low);
std::uint64_t ipow(std::uint64_t b, unsigned e);
// p^m == n with p prime; returns false otherwise.
bool prime_power(std::uint64_t n, std::uint32_t& p, std::uint32_t& m);

// Value-type convenience wrapper over a code and its field.
class FieldElem {
 public:
  FieldElem(FieldPtr f, Elem c) : f_(std::move(f)), c_(c) {}
  Elem code() const { return c_; }
  const FieldPtr& field() const { return f_; }
  std::vector<std::uint32_t> coefficients() const { return f_->coefficients(c_); }
  FieldElem operator+(const FieldElem& o) const { return {f_, f_->add(c_, o.c_)}; }
  FieldElem operator-(const FieldElem& o) const { return {f_, f_->sub(c_, o.c_)}; }
  FieldElem operator*(const FieldElem& o) const { return {f_, f_->mul(c_, o.c_)}; }
  FieldElem operator/(const FieldElem& o) const { return {f_, f_->div(c_, o.c_)}; }
  FieldElem operator-() const { return {f_, f_->neg(c_)}; }
  FieldElem pow(std::int64_t e) const { return {f_, f_->pow(c_, e)}; }
  FieldElem frobenius(std::uint32_t k) const { return {f_, f_->frobenius(c_, k)}; }
  bool operator==(const FieldElem& o) const { return c_ == o.c_ && f_->same_as(*o.f_); }

 private:
  FieldPtr f_;
  Elem c_;
};

}  // namespace u21::gf
