#include <functional>

#include "doctest.h"
#include "u21/classify.hpp"

using namespace u21;
using namespace u21::classify;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

std::vector<std::vector<std::uint64_t>> layer_dims(const StructureReport& r) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& l : r.layers) {
    std::vector<std::uint64_t> d;
    for (auto [i, m] : l)
      for (std::size_t k = 0; k < m; ++k) d.push_back(*r.factors[i].first.dim_mod);
    out.push_back(d);
  }
  return out;
}

PadicCharDescriptor desc(std::uint32_t q, std::uint32_t ell, Chi1Class c, Level lv = Level::Zero) {
  PadicCharDescriptor d;
  d.q = q;
  d.ell = ell;
  d.chi1 = c;
  d.level = lv;
  return d;
}

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p)
    if (gf::is_prime(p)) out.push_back(p);
  return out;
}

meataxe::SocleReport run(std::uint32_t q, int rank, std::uint32_t ell, std::int64_t e1, const grp::GroupSpec& g) {
  auto t = grp::flag_table(g);
  auto m = meataxe::from_flat(modrep::induced_module(g, t, modrep::torus_character(q, e1, 0, ell)));
  (void)rank;
  return meataxe::socle_series(m, 42);
}

std::uint64_t chi1_order(std::uint32_t q, std::uint32_t ell, std::int64_t e1) {
  return modrep::torus_character(q, e1, 0, ell).ord1;
}

}  // namespace

TEST_CASE("l-adic dimension table") {
  auto t3 = ladic_dimension_table(3);
  CHECK(t3.dim("sigma") == 14);
  CHECK(t3.dim("tau") == 32);
  CHECK(t3.dim("nu") == 6);
  CHECK(t3.dim("St") == 27);
  CHECK(t3.dim("R_1") == 7);
  CHECK(t3.dim("R_St") == 21);
  auto t5 = ladic_dimension_table(5);
  CHECK(t5.dim("sigma") == 84);
  CHECK(t5.dim("tau") == 144);
  CHECK(t5.dim("nu") == 20);
  CHECK(t5.dim("St") == 125);
  CHECK(t5.dim("R_1") == 21);
  CHECK(t5.dim("R_St") == 105);
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u}) {
    auto t = ladic_dimension_table(q);
    std::uint64_t Q = q;
    CHECK(t.counts[0].value == (Q + 1) * Q * (Q - 1) / 6);
    CHECK(t.counts[1].value == (Q + 1) * Q * (Q - 1) / 3);
    CHECK(t.counts[2].value == Q + 1);
    // 1 + St and R_1 + R_St both have dimension |G/B|
    CHECK(1 + t.dim("St") == Q * Q * Q + 1);
    CHECK(t.dim("R_1") + t.dim("R_St") == Q * Q * Q + 1);
  }
  CHECK(code_of([] { ladic_dimension_table(4); }) == ErrorCode::BadParameters);
}

TEST_CASE("modular constituent dimensions") {
  CHECK(modular_constituent_dims(3, 7).tau_plus == 26u);
  CHECK(modular_constituent_dims(5, 2).tau_plus == 104u);
  auto d = modular_constituent_dims(3, 2);
  CHECK(d.nu_bar == 6);
  CHECK(d.sigma_bar == 14);
  CHECK(!d.tau_plus.has_value());
}

TEST_CASE("finite principal series predictions") {
  auto a = finite_ps_structure(3, 2, 0, 0, 3);
  CHECK(a.length == 5);
  CHECK(a.uniserial == true);
  CHECK(layer_dims(a) == std::vector<std::vector<std::uint64_t>>{{1}, {6}, {14}, {6}, {1}});
  auto b = finite_ps_structure(5, 2, 0, 0, 3);
  CHECK(b.length == 4);
  CHECK(layer_dims(b) == std::vector<std::vector<std::uint64_t>>{{1}, {20, 104}, {1}});
  auto c = finite_ps_structure(5, 3, 12, 0, 3);
  CHECK(c.length == 3);
  CHECK(layer_dims(c) == std::vector<std::vector<std::uint64_t>>{{21}, {84}, {21}});
  CHECK(c.sub_iso_quotient == true);
  auto r = finite_ps_structure(3, 7, 1, 0, 3);
  CHECK(r.length == 1);
  CHECK(r.factors[0].first.kind == "PS");
  auto u = finite_ps_structure(3, 2, 0, 0, 2);
  CHECK(layer_dims(u) == std::vector<std::vector<std::uint64_t>>{{1}, {2}, {1}});
  CHECK(finite_ps_structure(3, 5, 0, 0, 3).semisimple == true);
  CHECK(code_of([] { finite_ps_structure(5, 3, 0, 0, 3); }) == ErrorCode::UnsupportedCase);
  CHECK(code_of([] { finite_ps_structure(5, 5, 0, 0, 3); }) == ErrorCode::UnsupportedCase);
  CHECK(code_of([] { finite_ps_structure(5, 4, 0, 0, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { finite_ps_structure(5, 7, 0, 0, 4); }) == ErrorCode::BadParameters);
}

TEST_CASE("dimension conservation across the parameter space") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u})
    for (std::uint32_t ell : primes_upto(60))
      for (int rank : {2, 3})
        for (std::int64_t e1 = 0; e1 < (std::int64_t)(q * q - 1); e1 += 1 + q / 3) {
          StructureReport r;
          auto code = code_of([&] { r = finite_ps_structure(q, ell, e1, 1, rank); });
          if (code != ErrorCode::Ok) {
            REQUIRE(code == ErrorCode::UnsupportedCase);
            CHECK((q % ell == 0 || (rank == 3 && ell == 3 && (q + 1) % 3 == 0)));
            continue;
          }
          CAPTURE(q);
          CAPTURE(ell);
          CAPTURE(e1);
          std::uint64_t Q = q;
          REQUIRE(r.total_dim() == (rank == 3 ? Q * Q * Q + 1 : Q + 1));
          std::size_t len = 0;
          for (const auto& [l, m] : r.factors) len += m;
          CHECK(len == r.length);
          if (!r.layers.empty()) {
            std::size_t in_layers = 0;
            for (const auto& l : r.layers)
              for (auto [i, m] : l) in_layers += m;
            CHECK(in_layers == r.length);
          }
        }
}

TEST_CASE("p-adic reducibility points") {
  CHECK(padic_reducibility(desc(3, 0, Chi1Class::DeltaMinusHalf)).clause == 1);
  CHECK(padic_reducibility(desc(3, 7, Chi1Class::DeltaHalf)).clause == 1);
  CHECK(!padic_reducibility(desc(3, 0, Chi1Class::RegularOther)).reducible);
  CHECK(padic_reducibility(desc(3, 0, Chi1Class::UnitaryPullback)).clause == 3);
  CHECK(padic_reducibility(desc(5, 0, Chi1Class::EtaDeltaQuarter)).clause == 2);
  CHECK(!padic_reducibility(desc(5, 0, Chi1Class::Trivial)).reducible);
  // trivial agrees with delta^(1/2) once ell | q^2 - 1
  CHECK(padic_reducibility(desc(5, 3, Chi1Class::Trivial)).clause == 1);
  CHECK(!padic_reducibility(desc(5, 11, Chi1Class::Trivial)).reducible);
}

TEST_CASE("collapse follows the congruences") {
  // ell | q+1: eta delta^(+-1/4) = delta = 1
  CHECK(collapse(desc(5, 3, Chi1Class::EtaDeltaQuarter)).chi1 == Chi1Class::DeltaMinusHalf);
  // ell | q^2-q+1: delta^(-1/2) = eta delta^(1/4), delta^(1/2) = eta delta^(-1/4)
  CHECK(collapse(desc(3, 7, Chi1Class::EtaDeltaQuarter)).chi1 == Chi1Class::DeltaMinusHalf);
  CHECK(collapse(desc(3, 7, Chi1Class::EtaDeltaMinusQuarter)).chi1 == Chi1Class::DeltaHalf);
  // ell | q-1, ell odd: eta delta^(+-1/4) = eta, distinct from delta
  CHECK(collapse(desc(7, 3, Chi1Class::EtaDeltaMinusQuarter)).chi1 == Chi1Class::EtaDeltaQuarter);
  CHECK(collapse(desc(7, 3, Chi1Class::DeltaHalf)).chi1 == Chi1Class::DeltaMinusHalf);
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u})
    for (std::uint32_t ell : primes_upto(40))
      for (int c = 0; c <= (int)Chi1Class::RegularOther; ++c) {
        if (q % ell == 0) continue;
        auto d = desc(q, ell, (Chi1Class)c);
        auto once = collapse(d);
        CHECK(collapse(once) == once);
      }
}

TEST_CASE("p-adic structures") {
  auto c3 = padic_ps_structure(desc(3, 7, Chi1Class::DeltaMinusHalf));
  CHECK(c3.length == 3);
  CHECK(c3.sub_iso_quotient == false);
  bool found = false;
  for (const auto& [l, m] : c3.factors) found = found || l.str() == "I_Lambda_x(tau_plus(1))";
  CHECK(found);
  auto c4 = padic_ps_structure(desc(3, 2, Chi1Class::DeltaMinusHalf));
  CHECK(c4.length == 6);
  CHECK(c4.sub_iso_quotient == true);
  auto c5 = padic_ps_structure(desc(5, 2, Chi1Class::Trivial));
  CHECK(c5.length == 5);
  auto c1 = padic_ps_structure(desc(3, 11, Chi1Class::DeltaMinusHalf));
  CHECK(c1.length == 2);
  CHECK(c1.semisimple == false);
  CHECK(c1.unique_sub == "triv(1_G)");
  auto c1d = padic_ps_structure(desc(3, 11, Chi1Class::DeltaHalf));
  CHECK(c1d.unique_sub == "St(St_G)");
  // 5 | q^2+1: delta_B = 1 mod 5 and the two classes coincide
  CHECK(collapse(desc(3, 5, Chi1Class::DeltaHalf)).chi1 == Chi1Class::DeltaMinusHalf);
  CHECK(padic_ps_structure(desc(3, 5, Chi1Class::DeltaMinusHalf)).semisimple == true);
  CHECK(padic_ps_structure(desc(7, 3, Chi1Class::DeltaMinusHalf)).semisimple == true);
  CHECK(padic_ps_structure(desc(7, 3, Chi1Class::EtaDeltaQuarter)).semisimple == true);
  auto ram = padic_ps_structure(desc(5, 3, Chi1Class::UnitaryPullback));
  CHECK(ram.length == 4);
  CHECK(ram.sub_iso_quotient == true);
  auto pos = padic_ps_structure(desc(5, 2, Chi1Class::UnitaryPullback, Level::Positive));
  CHECK(pos.length == 4);
  CHECK(pos.sub_iso_quotient == true);
  CHECK(pos.factors[1].first.kind == "I_kappa_x");
  CHECK(padic_ps_structure(desc(5, 7, Chi1Class::UnitaryPullback, Level::Positive)).length == 2);
  CHECK(padic_ps_structure(desc(3, 0, Chi1Class::DeltaMinusHalf)).length == 2);
  CHECK(code_of([] { padic_ps_structure(desc(5, 3, Chi1Class::DeltaMinusHalf)); }) == ErrorCode::UnsupportedCase);
  CHECK(code_of([] { padic_ps_structure(desc(5, 5, Chi1Class::DeltaMinusHalf)); }) == ErrorCode::UnsupportedCase);
  CHECK(code_of([] { padic_ps_structure(desc(5, 7, Chi1Class::Trivial, Level::Positive)); }) ==
        ErrorCode::BadParameters);
}

TEST_CASE("verdict consistency") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u})
    for (std::uint32_t ell : primes_upto(50))
      for (int c = 0; c <= (int)Chi1Class::RegularOther; ++c)
        for (auto lv : {Level::Zero, Level::Positive}) {
          auto d = desc(q, ell, (Chi1Class)c, lv);
          StructureReport r;
          auto code = code_of([&] { r = padic_ps_structure(d); });
          if (code != ErrorCode::Ok) {
            CHECK((code == ErrorCode::UnsupportedCase || code == ErrorCode::BadParameters));
            continue;
          }
          CHECK(padic_reducibility(d).reducible == (r.length >= 2));
          if (r.sub_iso_quotient == true) CHECK(r.unique_sub == r.unique_quotient);
        }
}

TEST_CASE("predictions agree with MeatAxe and the bridge holds") {
  for (std::uint32_t q : {3u, 5u}) {
    auto gx = grp::make_group(q, 3), gy = grp::make_group(q, 2);
    for (std::uint32_t ell : {2u, 3u, 5u, 7u, 11u}) {
      if (q % ell == 0) {
        CHECK(code_of([&] { finite_ps_structure(q, ell, 0, 0, 3); }) == ErrorCode::UnsupportedCase);
        continue;
      }
      // One representative of each kind of chi1 reachable mod ell.
      std::vector<std::int64_t> reps;
      bool have_pullback = false, have_regular = false;
      reps.push_back(0);
      for (std::int64_t e1 = 1; e1 < (std::int64_t)(q * q - 1); ++e1) {
        auto o = chi1_order(q, ell, e1);
        if (o == 1) continue;
        bool pull = (q + 1) % o == 0;
        if (pull && !have_pullback) {
          reps.push_back(e1);
          have_pullback = true;
        }
        if (!pull && !have_regular) {
          reps.push_back(e1);
          have_regular = true;
        }
      }
      for (auto e1 : reps) {
        CAPTURE(q);
        CAPTURE(ell);
        CAPTURE(e1);
        StructureReport px;
        if (code_of([&] { px = finite_ps_structure(q, ell, e1, 0, 3); }) == ErrorCode::UnsupportedCase) {
          CHECK((ell == 3 && e1 == 0));
          continue;
        }
        auto sx = run(q, 3, ell, e1, gx);
        auto ox = observe(gx, sx.composition);
        CHECK(compare_finite(px, ox, &sx).empty());
        auto py = finite_ps_structure(q, ell, e1, 0, 2);
        auto sy = run(q, 2, ell, e1, gy);
        auto oy = observe(gy, sy.composition);
        CHECK(compare_finite(py, oy, &sy).empty());
        auto d = descriptor_for_finite(q, ell, e1, 0);
        if (d.chi1 == Chi1Class::RegularOther) continue;
        auto b = bridge_check(d, ox, oy);
        CHECK(b.ok);
      }
    }
  }
}

TEST_CASE("bridge rejects mismatched inputs and missing cuspidals") {
  auto g = grp::make_group(3, 3), h = grp::make_group(3, 2);
  auto s = meataxe::socle_series(
      meataxe::from_flat(modrep::induced_module(g, grp::flag_table(g), modrep::torus_character(3, 0, 0, 2))), 1);
  auto ox = observe(g, s.composition);
  CHECK(ox.factors.size() == 3);
  std::size_t cusp = 0;
  for (const auto& f : ox.factors) cusp += f.cuspidal ? f.dim * f.multiplicity : 0;
  CHECK(cusp == 26);  // nu twice and sigma3
  auto sy = meataxe::socle_series(
      meataxe::from_flat(modrep::induced_module(h, grp::flag_table(h), modrep::torus_character(3, 0, 0, 2))), 1);
  auto oy = observe(h, sy.composition);
  auto d = descriptor_for_finite(3, 2, 0, 0);
  CHECK(bridge_check(d, ox, oy).ok);
  CHECK(code_of([&] { bridge_check(d, oy, ox); }) == ErrorCode::MismatchedParameters);
  auto d7 = d;
  d7.ell = 7;
  CHECK(code_of([&] { bridge_check(d7, ox, oy); }) == ErrorCode::MismatchedParameters);
  auto drop = ox;
  drop.factors.erase(drop.factors.begin() + 1);
  CHECK(!bridge_check(d, drop, oy).ok);
}
