#include <random>

#include "doctest.h"
#include "u21/matrix.hpp"
#include "u21/poly.hpp"

using namespace u21;
using gf::Elem;
using gf::Field;
using linalg::Matrix;

namespace {

Matrix random_matrix(const gf::FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(f, r, c);
  for (auto& x : m.data()) x = (rng() % (zero_bias + 1)) ? 0 : (Elem)(rng() % f->order());
  return m;
}

Matrix naive_mul(const Matrix& a, const Matrix& b) {
  const auto& f = a.F();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

// Determinant by elimination, for the characteristic polynomial oracle.
Elem det(Matrix m) {
  const auto& f = m.F();
  Elem d = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    Elem inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Elem u = f.mul(m(i, c), inv);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(u, m(c, j)));
    }
  }
  return d;
}

const std::vector<std::pair<int, int>> kFields{{2, 1}, {3, 1}, {101, 1}, {2, 2}, {7, 2}, {3, 4}};

}  // namespace

TEST_CASE("matrix multiplication kernels agree with the naive product") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : kFields) {
    auto f = Field::make(p, m);
    CAPTURE(f->name());
    for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 130u}) {
      Matrix a = random_matrix(f, n, n + 3, rng), b = random_matrix(f, n + 3, n, rng);
      REQUIRE(a * b == naive_mul(a, b));
    }
  }
}

TEST_CASE("nullspace, rank and inverse") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : kFields) {
    auto f = Field::make(p, m);
    CAPTURE(f->name());
    for (int trial = 0; trial < 6; ++trial) {
      std::size_t n = 10 + trial * 17, r = 3 + trial * 5;
      // rank <= r by construction
      Matrix a = random_matrix(f, n, r, rng) * random_matrix(f, r, n, rng);
      Matrix ns = linalg::left_nullspace(a);
      CHECK(ns.rows() + linalg::rank(a) == n);
      CHECK((ns * a).is_zero());
      CHECK(linalg::rank(ns) == ns.rows());
    }
    Matrix g = random_matrix(f, 40, 40, rng);
    if (auto gi = linalg::inverse(g)) CHECK(*gi * g == Matrix::identity(f, 40));
    CHECK(!linalg::inverse(Matrix(f, 3, 3)).has_value());
  }
}

TEST_CASE("characteristic polynomial matches determinant oracle and Cayley-Hamilton") {
  std::mt19937_64 rng(3);
  for (auto [p, m] : kFields) {
    auto f = Field::make(p, m);
    CAPTURE(f->name());
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
      Matrix a = random_matrix(f, n, n, rng, (int)(n % 3));
      auto cp = gf::poly::charpoly(a);
      REQUIRE(cp.size() == n + 1);
      CHECK(cp[n] == 1);
      CHECK(gf::poly::eval_matrix(cp, a).is_zero());
      for (Elem x = 0; x < std::min<Elem>(f->order(), 12); ++x) {
        Matrix xa = linalg::scaled(a, f->neg(1));
        for (std::size_t i = 0; i < n; ++i) xa(i, i) = f->add(xa(i, i), x);
        CHECK(gf::poly::eval(*f, cp, x) == det(xa));
      }
    }
  }
}

TEST_CASE("tracked subspace expresses members in the spanning sequence") {
  auto f = Field::make(7, 2);
  std::mt19937_64 rng(5);
  linalg::Subspace s(f, 12, true);
  std::vector<std::vector<Elem>> vs;
  while (vs.size() < 6) {
    Matrix r = random_matrix(f, 1, 12, rng);
    std::vector<Elem> v(r.row(0).begin(), r.row(0).end());
    if (s.insert(v)) vs.push_back(v);
  }
  std::vector<Elem> comb(12, 0);
  std::vector<Elem> coeff{3, 0, 5, 1, 0, 44};
  for (std::size_t t = 0; t < vs.size(); ++t) linalg::axpy(*f, comb, coeff[t], vs[t]);
  auto e = s.express(comb);
  REQUIRE(e.has_value());
  CHECK(*e == coeff);
  std::vector<Elem> outside(12, 0);
  bool found = false;
  for (std::size_t j = 0; j < 12 && !found; ++j) {
    outside.assign(12, 0);
    outside[j] = 1;
    found = !s.contains(outside);
  }
  CHECK(found);
  CHECK(!s.express(outside).has_value());
}
