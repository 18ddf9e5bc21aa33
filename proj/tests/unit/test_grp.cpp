#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "u21/grp.hpp"

using namespace u21;
using namespace u21::grp;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

GMat random_element(const GroupSpec& g, std::mt19937_64& rng) {
  GMat x = identity(g.rank);
  for (int k = 0; k < 30; ++k) x = mul(*g.field, x, g.generators[rng() % g.generators.size()]);
  return x;
}

// Brute-force count of isotropic lines.
std::uint64_t isotropic_lines(const GroupSpec& g) {
  const auto& f = *g.field;
  const Elem Q = f.order();
  std::uint64_t count = 0;
  std::array<Elem, 3> v{0, 0, 0};
  const int n = g.rank;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= Q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = (Elem)(c % Q);
      c /= Q;
    }
    Elem h = 0;
    for (int i = 0; i < n; ++i) h = f.add(h, f.mul(v[i], g.conj(v[n - 1 - i])));
    if (h == 0) ++count;
  }
  return count / (Q - 1);
}

}  // namespace

TEST_CASE("generators are unitary and group orders match closed forms") {
  auto g3 = make_group(3, 3);
  for (const auto& x : g3.generators) CHECK(is_unitary(g3, x));
  CHECK(group_order(g3, OrderMethod::Enumerate) == 24192);
  CHECK(group_order(g3, OrderMethod::Formula) == 24192);
  auto h3 = make_group(3, 2);
  CHECK(group_order(h3, OrderMethod::Enumerate) == 96);
  CHECK(group_order_formula(3, 2) == 96);
  CHECK(special_unitary_order_rank2(3) == 24);
  auto h5 = make_group(5, 2);
  CHECK(group_order(h5, OrderMethod::Enumerate) == 720);
  auto h9 = make_group(9, 2);
  CHECK(group_order(h9, OrderMethod::Enumerate) == group_order_formula(9, 2));
  CHECK(group_order_formula(5, 3) == 2268000);
}

TEST_CASE("parameter validation") {
  CHECK(code_of([] { make_group(4, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { make_group(6, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { make_group(3, 4); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { enumerate(make_group(5, 3)); }) == ErrorCode::EnumerationTooLarge);
  auto g = make_group(3, 3);
  GMat bad = identity(3);
  bad(0, 1) = 1;
  CHECK(code_of([&] { borel_membership(g, bad, nullptr); }) == ErrorCode::NotInGroup);
}

TEST_CASE("flag tables") {
  for (auto [q, r] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {3, 2}, {5, 2}, {7, 3}}) {
    auto g = make_group(q, r);
    auto t = flag_table(g);
    CAPTURE(q);
    CAPTURE(r);
    std::uint64_t expected = r == 3 ? (std::uint64_t)q * q * q + 1 : (std::uint64_t)q + 1;
    CHECK(t.size() == expected);
    CHECK(isotropic_lines(g) == expected);
    CHECK(t.lines[0] == std::array<Elem, 3>{1, 0, 0});
    for (std::size_t i = 0; i < t.size(); ++i) {
      // s(i) e_1 = line i
      for (int k = 0; k < r; ++k) REQUIRE(t.sections[i](k, 0) == t.lines[i][k]);
    }
  }
}

TEST_CASE("coset action: Borel values, cocycle identity, transitivity, two Borel orbits") {
  std::mt19937_64 rng(9);
  for (auto [q, r] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {3, 2}, {5, 2}}) {
    auto g = make_group(q, r);
    auto t = flag_table(g);
    const auto& f = *g.field;
    for (int trial = 0; trial < 20; ++trial) {
      GMat x = random_element(g, rng), y = random_element(g, rng);
      REQUIRE(is_unitary(g, x));
      CHECK(mul(f, x, inverse(g, x)) == identity(r));
      for (std::size_t i = 0; i < t.size(); i += 7) {
        auto sy = coset_action(g, t, y, i);
        auto sx = coset_action(g, t, x, sy.j);
        auto sxy = coset_action(g, t, mul(f, x, y), i);
        REQUIRE(sxy.j == sx.j);
        REQUIRE(sxy.b == mul(f, sx.b, sy.b));
        std::array<Elem, 3> d;
        REQUIRE(borel_membership(g, sxy.b, &d));
      }
    }
    // Orbits of the generators, and of the Borel generators (all but w).
    auto orbits = [&](std::size_t ngens) {
      std::vector<int> comp(t.size(), -1);
      int c = 0;
      for (std::size_t s = 0; s < t.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
          std::size_t i = stack.back();
          stack.pop_back();
          for (std::size_t k = 0; k < ngens; ++k) {
            std::size_t j = coset_action(g, t, g.generators[k], i).j;
            if (comp[j] < 0) {
              comp[j] = c;
              stack.push_back(j);
            }
          }
        }
        ++c;
      }
      return c;
    };
    CHECK(orbits(g.generators.size()) == 1);
    CHECK(orbits(g.generators.size() - 1) == 2);
  }
}
