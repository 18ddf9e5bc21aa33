#include <functional>
#include <random>

#include "doctest.h"
#include "u21/hecke.hpp"
#include "u21/meataxe.hpp"

using namespace u21;
using namespace u21::hecke;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

// Count rule stated directly in terms of divisibility.
std::size_t rule_count(std::uint64_t q, int a, std::uint64_t ell) {
  std::uint64_t qa = 1;
  for (int i = 0; i < a; ++i) qa = qa * q % ell;
  if ((qa + 1) % ell != 0) return 4;
  if ((q + 1) % ell != 0) return 2;
  return 1;
}

bool is_root(std::int64_t x, const QuadraticRelation& r, std::uint32_t ell) {
  return reduce(x * x - r.c1 * x - r.c0, ell) == 0;
}

}  // namespace

TEST_CASE("presentations") {
  auto p = presentation(3, 3, 0);
  CHECK(p.rel_x.c1 == 26);
  CHECK(p.rel_x.c0 == 27);
  CHECK(p.rel_y.c1 == 2);
  CHECK(p.rel_y.c0 == 3);
  CHECK(p.fx_at_one.str() == "1");
  auto p7 = presentation(3, 3, 7);
  CHECK(p7.rel_x.c1 == 5);
  CHECK(p7.rel_x.c0 == 6);
  CHECK(p7.rel_y.c1 == 2);
  CHECK(p7.rel_y.c0 == 3);
  auto p2 = presentation(3, 1, 2);
  CHECK(p2.rel_x.c1 == 0);
  CHECK(p2.rel_x.c0 == 1);
  CHECK(p2.rel_y.c1 == 0);
  CHECK(p2.rel_y.c0 == 1);
  CHECK(p2.fx_at_one.str() == "1/3");
  CHECK(code_of([] { presentation(4, 3, 0); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { presentation(3, 2, 0); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { presentation(9, 3, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { presentation(3, 3, 4); }) == ErrorCode::BadParameters);
}

TEST_CASE("character tables") {
  CHECK(characters(presentation(3, 3, 5)).size() == 4);
  CHECK(characters(presentation(3, 3, 7)).size() == 2);
  CHECK(collapse_case(presentation(3, 3, 7)) == Collapse::Pairs);
  auto one = characters(presentation(3, 3, 2));
  REQUIRE(one.size() == 1);
  CHECK(one[0].aliases.size() == 3);
  CHECK(characters(presentation(5, 1, 0)).size() == 4);
  auto pairs = characters(presentation(3, 3, 7));
  CHECK(pairs[0].name == "Xi_sgn");
  CHECK(pairs[0].aliases == std::vector<std::string>{"Xi_1"});
  CHECK(pairs[1].aliases == std::vector<std::string>{"Xi_2"});
}

TEST_CASE("character counts and root sets over all small primes") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u})
    for (int a : {1, 3})
      for (std::uint32_t ell = 2; ell <= 100; ++ell) {
        if (!gf::is_prime(ell) || q % ell == 0) continue;
        auto p = presentation(q, a, ell);
        auto cs = characters(p);
        CAPTURE(q);
        CAPTURE(a);
        CAPTURE(ell);
        REQUIRE(cs.size() == rule_count(q, a, ell));
        for (const auto& c : cs) {
          CHECK(is_root(c.value_x, p.rel_x, ell));
          CHECK(is_root(c.value_y, p.rel_y, ell));
        }
        // roots are exactly {q^a, -1} and {q, -1}: brute force over GF(ell)
        std::size_t rx = 0, ry = 0;
        for (std::int64_t x = 0; x < ell; ++x) {
          rx += is_root(x, p.rel_x, ell);
          ry += is_root(x, p.rel_y, ell);
        }
        CHECK(rx * ry == cs.size());
      }
}

TEST_CASE("regular characters give a Laurent algebra") {
  auto l = characters_regular(3, 7);
  CHECK(l.character(1) == 1);
  CHECK(l.character(-1) == 6);
  CHECK(code_of([&] { l.character(0); }) == ErrorCode::ZeroArgument);
  CHECK(code_of([&] { l.character(14); }) == ErrorCode::ZeroArgument);
  CHECK(code_of([] { characters_regular(3, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("convolution on G/B") {
  auto f101 = gf::Field::make(101, 1);
  for (auto [q, rank, d] : std::vector<std::tuple<int, int, int>>{{3, 2, 3}, {5, 2, 5}, {3, 3, 27}}) {
    CAPTURE(q);
    CAPTURE(rank);
    auto g = enumerate_group(grp::make_group(q, rank));
    auto b = borel_subgroup(*g);
    CHECK(b->coset_reps.size() == (rank == 3 ? (std::size_t)q * q * q + 1 : (std::size_t)q + 1));
    auto w = g->find(g->spec.generators.back());
    auto one = double_coset_indicator(g, b, f101, g->identity, 1);
    auto fw = double_coset_indicator(g, b, f101, w, 1);
    auto sq = convolve(fw, fw);
    CHECK(sq.at(g->identity) == (gf::Elem)d);
    // f_w * f_w = (d - 1) f_w + d
    for (std::uint32_t x = 0; x < g->order(); ++x)
      REQUIRE(sq.at(x) == f101->add(f101->mul(d - 1, fw.at(x)), f101->mul(d, one.at(x))));
    CHECK(convolve(one, fw).values == fw.values);
    CHECK(convolve(one, one).values == one.values);
  }
}

TEST_CASE("convolution is associative and checks its subgroup") {
  auto f7 = gf::Field::make(7, 1);
  auto g = enumerate_group(grp::make_group(5, 2));
  auto b = borel_subgroup(*g);
  std::mt19937_64 rng(8);
  auto random_fn = [&] {
    BiFunction f{g, b, f7, std::vector<gf::Elem>(g->order(), 0)};
    for (std::uint32_t x : {g->identity, g->find(g->spec.generators.back())}) {
      auto ind = double_coset_indicator(g, b, f7, x, (gf::Elem)(rng() % 7));
      for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = f7->add(f.values[i], ind.values[i]);
    }
    return f;
  };
  for (int t = 0; t < 3; ++t) {
    auto a = random_fn(), c = random_fn(), d = random_fn();
    CHECK(convolve(convolve(a, c), d).values == convolve(a, convolve(c, d)).values);
  }
  auto trivial = make_subgroup(*g, {g->identity});
  auto e = double_coset_indicator(g, trivial, f7, g->identity, 1);
  auto f = double_coset_indicator(g, b, f7, g->identity, 1);
  CHECK(code_of([&] { convolve(e, f); }) == ErrorCode::SubgroupMismatch);
  CHECK(convolve(e, e).values == e.values);
}

TEST_CASE("endomorphism algebras realise the presentation") {
  struct Case {
    int q, rank, ell, e1, a;
  };
  for (auto c : std::vector<Case>{{3, 3, 101, 0, 3}, {3, 3, 13, 0, 3}, {5, 3, 11, 12, 1}, {3, 2, 101, 0, 1}, {5, 3, 7, 12, 1}}) {
    CAPTURE(c.q);
    CAPTURE(c.ell);
    CAPTURE(c.e1);
    auto g = grp::make_group(c.q, c.rank);
    auto t = grp::flag_table(g);
    auto m = meataxe::from_flat(modrep::induced_module(g, t, modrep::torus_character(c.q, c.e1, 0, c.ell)));
    auto e = meataxe::endomorphism_algebra(m);
    REQUIRE(e.dim == 2);
    auto qp = meataxe::quadratic_parameter(e, c.q);
    // For U(1,1) the single generator is f_y, with exponent 1.
    auto p = presentation(c.q, c.a, c.ell);
    const auto& rel = c.rank == 3 ? p.rel_x : p.rel_y;
    CHECK(qp.exponent == c.a);
    CHECK((std::int64_t)qp.c1 == rel.c1);
    CHECK((std::int64_t)qp.c0 == rel.c0);
  }
  // Over GF(5) the ratio 27 = 2 and its inverse 3 are both powers of q.
  auto g = grp::make_group(3, 3);
  auto t = grp::flag_table(g);
  auto e5 = meataxe::endomorphism_algebra(
      meataxe::from_flat(modrep::induced_module(g, t, modrep::torus_character(3, 0, 0, 5))));
  CHECK(code_of([&] { meataxe::quadratic_parameter(e5, 3); }) == ErrorCode::AmbiguousParameter);
}
