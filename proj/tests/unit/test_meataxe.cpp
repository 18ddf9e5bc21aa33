#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "u21/meataxe.hpp"

using namespace u21;
using namespace u21::meataxe;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

// Natural permutation module of S_n on row vectors, generated by a
// transposition and an n-cycle.
Module permutation_module(std::size_t n, std::uint32_t p) {
  auto f = gf::Field::make(p, 1);
  Module m{f, n, {}};
  Matrix t(f, n, n), c(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ti = i == 0 ? 1 : (i == 1 ? 0 : i);
    t(i, ti) = 1;
    c(i, (i + 1) % n) = 1;
  }
  m.gens = {t, c};
  return m;
}

Module induced(int q, int rank, int ell, int e1 = 0, int e2 = 0) {
  auto g = grp::make_group(q, rank);
  auto t = grp::flag_table(g);
  return from_flat(modrep::induced_module(g, t, modrep::torus_character(q, e1, e2, ell)));
}

std::map<std::size_t, std::size_t> dims(const CompositionReport& r) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& f : r.factors) out[f.dim] += f.multiplicity;
  return out;
}

std::vector<std::vector<std::size_t>> layer_dims(const SocleReport& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& l : s.layers) {
    std::vector<std::size_t> d;
    for (auto [id, mult] : l)
      for (std::size_t k = 0; k < mult; ++k) d.push_back(s.composition.factors[id].dim);
    std::sort(d.begin(), d.end());
    out.push_back(d);
  }
  return out;
}

void check_report_invariants(const Module& m, const SocleReport& s) {
  std::size_t total = 0;
  for (const auto& f : s.composition.factors) total += f.dim * f.multiplicity;
  CHECK(total == m.dim);
  std::map<int, std::size_t> from_layers;
  for (const auto& l : s.layers)
    for (auto [id, mult] : l) from_layers[id] += mult;
  for (const auto& f : s.composition.factors) CHECK(from_layers[f.id] == f.multiplicity);
}

}  // namespace

TEST_CASE("permutation modules of symmetric groups") {
  // p | n: uniserial 1, n-2, 1
  {
    auto m = permutation_module(5, 5);
    auto s = socle_series(m, 42);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 2}, {3, 1}});
    CHECK(s.uniserial);
    CHECK(layer_dims(s) == std::vector<std::vector<std::size_t>>{{1}, {3}, {1}});
    check_report_invariants(m, s);
  }
  {
    auto m = permutation_module(4, 2);
    auto s = socle_series(m, 1);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
    CHECK(s.uniserial);
  }
  // p does not divide n: 1 + (n-1), semisimple
  {
    auto m = permutation_module(5, 3);
    auto s = socle_series(m, 7);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 1}, {4, 1}});
    CHECK(s.semisimple);
    CHECK(endomorphism_algebra(m).dim == 2);
  }
}

TEST_CASE("hom spaces consist of intertwiners") {
  auto m = permutation_module(6, 3);
  auto homs = hom_space(m, m);
  CHECK(homs.size() == 2);
  for (const auto& h : homs)
    for (const auto& g : m.gens) CHECK(g * h == h * g);
  auto e = endomorphism_algebra(m);
  for (const auto& b : e.basis)
    for (const auto& g : m.gens) CHECK(b * g.transpose() == g.transpose() * b);
}

TEST_CASE("direct sum of isomorphic irreducibles") {
  auto f = gf::Field::make(7, 1);
  std::mt19937_64 rng(3);
  Matrix a(f, 5, 5), b(f, 5, 5);
  for (auto& x : a.data()) x = (Elem)(rng() % 7);
  for (auto& x : b.data()) x = (Elem)(rng() % 7);
  // Two random matrices generate M_5(GF(7)) with overwhelming probability.
  Module s{f, 5, {a, b}};
  Module m{f, 10, {Matrix(f, 10, 10), Matrix(f, 10, 10)}};
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        m.gens[k](i, j) = s.gens[k](i, j);
        m.gens[k](i + 5, j + 5) = s.gens[k](i, j);
      }
  auto r = chop(m, 5);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].dim == 5);
  CHECK(r.factors[0].multiplicity == 2);
  CHECK(endomorphism_algebra(m).dim == 4);
  CHECK(is_isomorphic(s, r.representatives[0].module, 9));
  CHECK(code_of([&] { is_isomorphic(m, s, 1); }) == ErrorCode::NotIrreducible);
}

TEST_CASE("chop is seed independent up to ids and multiplicities") {
  auto m = induced(3, 3, 7);
  auto r1 = chop(m, 1), r2 = chop(m, 99);
  CHECK(dims(r1) == dims(r2));
  CHECK(r1.total_length == r2.total_length);
}

TEST_CASE("small induced modules") {
  SUBCASE("U(1,1), q=3, ell=2") {
    auto m = induced(3, 2, 2);
    auto s = socle_series(m, 42);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
    CHECK(s.uniserial);
  }
  SUBCASE("U(2,1), q=3, ell=5") {
    auto m = induced(3, 3, 5);
    auto s = socle_series(m, 42);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 1}, {27, 1}});
    CHECK(s.semisimple);
  }
  SUBCASE("U(2,1), q=3, ell=7") {
    auto m = induced(3, 3, 7);
    auto s = socle_series(m, 42);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 2}, {26, 1}});
    CHECK(layer_dims(s) == std::vector<std::vector<std::size_t>>{{1}, {26}, {1}});
    check_report_invariants(m, s);
  }
  SUBCASE("U(2,1), q=3, ell=2") {
    auto m = induced(3, 3, 2);
    auto s = socle_series(m, 42);
    CHECK(dims(s.composition) == std::map<std::size_t, std::size_t>{{1, 2}, {6, 2}, {14, 1}});
    CHECK(layer_dims(s) == std::vector<std::vector<std::size_t>>{{1}, {6}, {14}, {6}, {1}});
    CHECK(s.uniserial);
  }
}

TEST_CASE("quadratic parameters") {
  auto e = endomorphism_algebra(induced(3, 3, 101));
  REQUIRE(e.dim == 2);
  auto qp = quadratic_parameter(e, 3);
  CHECK(qp.d == 27);
  CHECK(qp.c1 == 26);
  CHECK(qp.c0 == 27);
  auto e2 = endomorphism_algebra(induced(3, 2, 101));
  CHECK(quadratic_parameter(e2, 3).d == 3);
  CHECK(code_of([] { quadratic_parameter(endomorphism_algebra(permutation_module(4, 5)), 9); }) ==
        ErrorCode::AmbiguousParameter);
}
