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
#include <vector>

#include "u21/gf.hpp"
#include "u21/matrix.hpp"

// Univariate polynomials over a finite field, little-endian coefficient codes.
namespace u21::gf::poly {

using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly mod(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly gcd(const Field& f, Poly a, Poly b);
Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m);
Elem eval(const Field& f, const Poly& a, Elem x);

// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
Poly charpoly(const linalg::Matrix& a);
// f(A) by Horner's rule.
linalg::Matrix eval_matrix(const Poly& p, const linalg::Matrix& a);

// Distinct monic irreducible factors of f, sorted by (degree, coefficients).
// Factors of degree above max_degree are dropped.
std::vector<Poly> irreducible_factors(const Field& f, const Poly& a, std::mt19937_64& rng,
                                      int max_degree);

}  // namespace u21::gf::poly
