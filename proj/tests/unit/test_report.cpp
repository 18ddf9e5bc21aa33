#include <functional>

#include "doctest.h"
#include "u21/report.hpp"
#include "u21/verify.hpp"

using namespace u21;
using report::Json;

namespace {

bool has_key(const Json& j, const std::string& key) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items())
      if (k == key || has_key(v, key)) return true;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (has_key(v, key)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("structure reports serialise their factor data") {
  for (std::uint32_t ell : {2u, 5u, 7u}) {
    auto r = classify::finite_ps_structure(3, ell, 0, 0, 3);
    auto j = report::structure_json(r);
    std::uint64_t total = 0;
    for (const auto& f : j["factors"]) total += f["label"]["dim_mod"].get<std::uint64_t>() * f["multiplicity"].get<std::uint64_t>();
    CHECK(total == 28);
    CHECK(j["total_dim"] == 28);
    CHECK(j["length"] == r.length);
    CHECK(j["flags"].contains("uniserial"));
  }
}

TEST_CASE("hecke report agrees with the character list") {
  auto p = hecke::presentation(5, 1, 3);
  auto j = report::hecke_json(p);
  CHECK(j["count"] == hecke::characters(p).size());
  CHECK(j["collapse"] == hecke::collapse_name(hecke::collapse_case(p)));
}

TEST_CASE("group report, rank 2 candidates") {
  auto j = report::group_json(grp::make_group(5, 2), true);
  CHECK(j["order_bfs"] == 720);
  CHECK(j["bfs_matches"]["q(q-1)(q+1)^2"] == true);
  CHECK(j["bfs_matches"]["q(q-1)(q+1)"] == false);
  CHECK(j["index_consistent"] == true);
}

TEST_CASE("verify output carries no timings and echoes the seed") {
  verify::Options opt;
  opt.seed = 1234;
  opt.only = {"A3", "A9"};
  auto s = verify::run("desk", opt);
  REQUIRE(s.criteria.size() == 2);
  auto j = s.to_json();
  CHECK(j["seed"] == 1234);
  CHECK(!has_key(j, "seconds"));
  CHECK(j["pass"] == true);
  CHECK(s.text().find("seed 1234") != std::string::npos);
}

TEST_CASE("chop criteria are seed independent") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    verify::Options opt;
    opt.seed = seed;
    for (const char* id : {"A2", "A3", "A4", "A6", "A7"}) {
      auto r = verify::run_criterion(id, opt);
      CAPTURE(id);
      CAPTURE(seed);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("unknown suites and criteria are rejected") {
  verify::Options opt;
  CHECK_THROWS_AS(verify::run("full", opt), Error);
  opt.only = {"A12"};
  CHECK_THROWS_AS(verify::run("desk", opt), Error);
}
