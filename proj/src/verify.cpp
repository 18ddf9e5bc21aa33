// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <sstream>

namespace u21::verify {

using report::Json;
using DimMult = std::map<std::size_t, std::size_t>;

namespace {

struct Spec {
  const char* id;
  const char* title;
  double limit;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s{
      {"A1", "group orders", 30},
      {"A2", "banal split, q=3 ell=5", 10},
      {"A3", "ell | q^2-q+1, q=3 ell=7", 10},
      {"A4", "ell | q+1, q=3 ell=2", 10},
      {"A5", "ell=2 with 4 | q-1, q=5", 60},
      {"A6", "U(1,1), q=3 ell=2", 5},
      {"A7", "order-2 chi1, q=5 ell=3", 60},
      {"A8", "Hecke parameters from End", 60},
      {"A9", "Hecke character counts", 1},
      {"A10", "bridge grid", 180},
      {"A11", "determinism", 0},
  };
  return s;
}

std::string code_str(ErrorCode c) { return error_code_name(c); }

meataxe::SocleReport socle_of(std::uint32_t q, std::uint32_t ell, std::int64_t e1, std::int64_t e2,
                              std::uint64_t seed, const grp::GroupSpec& g) {
  auto t = grp::flag_table(g);
  auto chi = modrep::torus_character(q, e1, e2, ell);
  return meataxe::socle_series(meataxe::from_flat(modrep::induced_module(g, t, chi)), seed);
}

DimMult dims_of(const meataxe::CompositionReport& r) {
  DimMult out;
  for (const auto& f : r.factors) out[f.dim] += f.multiplicity;
  return out;
}

std::string show(const DimMult& d) {
  std::string s;
  for (auto [dim, m] : d) s += (s.empty() ? "" : ", ") + std::to_string(dim) + "x" + std::to_string(m);
  return "{" + s + "}";
}

std::string show_layers(const std::vector<std::vector<std::size_t>>& l) {
  std::string s;
  for (const auto& layer : l) {
    s += "[";
    for (std::size_t i = 0; i < layer.size(); ++i) s += (i ? "," : "") + std::to_string(layer[i]);
    s += "]";
  }
  return s;
}

// One chop/socle criterion: exact factor multiset, optional socle layers
// and flags, and agreement with the classifier's prediction.
struct ChopCase {
  std::uint32_t q;
  int rank;
  std::uint32_t ell;
  std::int64_t e1;
  DimMult factors;
  std::vector<std::vector<std::size_t>> layers;  // empty: not asserted
  std::optional<bool> uniserial, semisimple;
  std::optional<std::size_t> single_id_dim;  // that dim occurs as one isomorphism class
};

void run_chop(const ChopCase& c, std::uint64_t seed, CriterionResult& out) {
  auto g = grp::make_group(c.q, c.rank);
  auto s = socle_of(c.q, c.ell, c.e1, 0, seed, g);
  auto got = dims_of(s.composition);
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < s.layers.size(); ++i) layers.push_back(report::layer_dims(s, i));
  if (got != c.factors) out.diffs.push_back("factors: expected " + show(c.factors) + ", got " + show(got));
  if (!c.layers.empty() && layers != c.layers)
    out.diffs.push_back("layers: expected " + show_layers(c.layers) + ", got " + show_layers(layers));
  if (c.uniserial && *c.uniserial != s.uniserial) out.diffs.push_back("uniserial flag");
  if (c.semisimple && *c.semisimple != s.semisimple) out.diffs.push_back("semisimple flag");
  if (c.single_id_dim) {
    std::size_t classes = 0;
    for (const auto& f : s.composition.factors) classes += f.dim == *c.single_id_dim;
    if (classes != 1)
      out.diffs.push_back("factors of dim " + std::to_string(*c.single_id_dim) + " are not all isomorphic");
  }
  Json pred;
  try {
    auto p = classify::finite_ps_structure(c.q, c.ell, c.e1, 0, c.rank);
    auto d = classify::compare_finite(p, classify::observe(g, s.composition), &s);
    for (const auto& x : d) out.diffs.push_back("prediction: " + x);
    pred = {{"clause", p.clause}, {"diffs", d}};
  } catch (const Error& e) {
    out.diffs.push_back(std::string("prediction: ") + error_code_name(e.code()) + ": " + e.what());
  }
  out.detail = {{"q", c.q},
                {"rank", c.rank},
                {"ell", c.ell},
                {"e1", c.e1},
                {"seed", seed},
                {"dim", s.composition.dim},
                {"factors", report::composition_json(s.composition)["factors"]},
                {"layer_dims", layers},
                {"uniserial", s.uniserial},
                {"semisimple", s.semisimple},
                {"prediction", pred}};
  for (auto& f : out.detail["factors"]) f.erase("witness");
}

void a1(CriterionResult& out) {
  auto gx = report::group_json(grp::make_group(3, 3), true);
  auto gy = report::group_json(grp::make_group(3, 2), true);
  if (gx["order_bfs"] != 24192 || gx["order_formula"] != 24192)
    out.diffs.push_back("U(2,1)(3): formula " + gx["order_formula"].dump() + ", BFS " + gx["order_bfs"].dump());
  if (!gx["index_consistent"].get<bool>()) out.diffs.push_back("U(2,1)(3): |G|/|B| differs from the flag count");
  // Rank 2: the BFS order is recorded against both candidates; only the
  // index |G|/|B| = q+1 is asserted.
  if (!gy["index_consistent"].get<bool>() || gy["flags"] != 4)
    out.diffs.push_back("U(1,1)(3): |G|/|B| differs from q+1");
  out.detail = {{"U(2,1)", gx}, {"U(1,1)", gy}};
}

struct QuadCase {
  std::uint32_t q;
  int rank;
  std::uint32_t ell;
  std::int64_t e1;
  int a;
  std::uint64_t d;
};

void a8(std::uint64_t seed, CriterionResult& out) {
  (void)seed;
  const std::vector<QuadCase> cases{{3, 3, 101, 0, 3, 27}, {3, 2, 101, 0, 1, 3}, {5, 3, 11, 12, 1, 5}};
  Json rows = Json::array();
  for (const auto& c : cases) {
    auto g = grp::make_group(c.q, c.rank);
    auto t = grp::flag_table(g);
    auto m = meataxe::from_flat(modrep::induced_module(g, t, modrep::torus_character(c.q, c.e1, 0, c.ell)));
    auto e = meataxe::endomorphism_algebra(m);
    Json row{{"q", c.q}, {"rank", c.rank}, {"ell", c.ell}, {"e1", c.e1}, {"end_dim", e.dim}};
    std::string tag = "q=" + std::to_string(c.q) + " rank=" + std::to_string(c.rank) + " ell=" + std::to_string(c.ell);
    try {
      auto qp = meataxe::quadratic_parameter(e, c.q);
      row["quadratic"] = report::quadratic_json(qp);
      if (qp.d != c.d)
        out.diffs.push_back(tag + ": d = " + std::to_string(qp.d) + ", expected " + std::to_string(c.d));
      // The normalised relation must be the symbolic one reduced mod ell.
      auto pres = hecke::presentation(c.q, c.a, c.ell);
      const auto& rel = c.rank == 2 ? pres.rel_y : pres.rel_x;
      if ((std::int64_t)qp.c1 != rel.c1 || (std::int64_t)qp.c0 != rel.c0)
        out.diffs.push_back(tag + ": relation differs from the presentation");
    } catch (const Error& err) {
      out.diffs.push_back(tag + ": " + error_code_name(err.code()) + ": " + err.what());
    }
    rows.push_back(row);
  }
  out.detail = {{"cases", rows}};
}

// Count predicted directly from which quadratic relations have a double
// root mod ell.
std::size_t count_rule(std::uint64_t q, int a, std::uint64_t ell) {
  std::uint64_t qa = 1;
  for (int i = 0; i < a; ++i) qa = qa * q % ell;
  if ((qa + 1) % ell != 0) return 4;
  if ((q + 1) % ell != 0) return 2;
  return 1;
}

void a9(CriterionResult& out) {
  std::map<std::string, std::size_t> histogram;
  std::size_t checked = 0;
  Json skipped = Json::array();
  for (std::uint32_t q : {3u, 5u, 7u, 9u})
    for (int a : {1, 3})
      for (std::uint32_t ell = 2; ell <= 100; ++ell) {
        if (!gf::is_prime(ell)) continue;
        if (q % ell == 0) {
          if (a == 1) skipped.push_back({{"q", q}, {"ell", ell}});
          continue;
        }
        auto p = hecke::presentation(q, a, ell);
        auto n = hecke::characters(p).size();
        auto want = count_rule(q, a, ell);
        ++checked;
        ++histogram[std::to_string(n)];
        if (n != want)
          out.diffs.push_back("q=" + std::to_string(q) + " a=" + std::to_string(a) + " ell=" + std::to_string(ell) +
                              ": " + std::to_string(n) + " characters, rule gives " + std::to_string(want));
      }
  out.detail = {{"checked", checked}, {"histogram", histogram}, {"skipped_ell_equals_p", skipped}};
}

// Bridge grid. A case is expected unsupported when ell = p, or when
// 3 = ell | q+1 and chi1 is trivial.
struct GridCase {
  std::uint32_t q, ell;
  std::int64_t e1;
  std::string key() const {
    return "q=" + std::to_string(q) + ",ell=" + std::to_string(ell) + ",e1=" + std::to_string(e1);
  }
  bool expect_unsupported() const { return q % ell == 0 || (ell == 3 && (q + 1) % 3 == 0 && e1 == 0); }
};

std::vector<GridCase> grid() {
  std::vector<GridCase> out;
  auto add = [&](std::uint32_t q, std::uint32_t ell) {
    out.push_back({q, ell, 0});
    if (q % ell == 0) return;
    // first chi1 of order dividing q+1 that survives projection
    for (std::int64_t e1 = 1; e1 < (std::int64_t)(q * q - 1); ++e1) {
      auto o = modrep::torus_character(q, e1, 0, ell).ord1;
      if (o > 1 && (q + 1) % o == 0) {
        out.push_back({q, ell, e1});
        break;
      }
    }
  };
  for (std::uint32_t q : {3u, 5u})
    for (std::uint32_t ell : {2u, 5u, 7u}) add(q, ell);
  add(5, 3);
  return out;
}

Json run_grid_case(const GridCase& c, std::uint64_t seed, std::vector<std::string>& diffs) {
  Json j{{"expected", c.expect_unsupported() ? "unsupported" : "supported"}};
  auto note = [&](const std::string& s) { diffs.push_back(c.key() + ": " + s); };
  std::string status = "supported";
  classify::PadicCharDescriptor d;
  std::optional<classify::StructureReport> px, py, pp;
  try {
    d = classify::descriptor_for_finite(c.q, c.ell, c.e1, 0);
    j["descriptor"] = report::descriptor_json(d);
    pp = classify::padic_ps_structure(d);
    px = classify::finite_ps_structure(c.q, c.ell, c.e1, 0, 3);
    py = classify::finite_ps_structure(c.q, c.ell, c.e1, 0, 2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedCase) {
      note(code_str(e.code()) + ": " + e.what());
      status = "error";
    } else {
      status = "unsupported";
      j["reason"] = e.what();
    }
  }
  j["status"] = status;
  if (status != j["expected"]) note("status " + status + ", expected " + j["expected"].get<std::string>());
  if (pp) j["padic_clause"] = pp->clause;
  if (c.q % c.ell == 0) return j;  // no modular module in defining characteristic
  // The MeatAxe runs on unsupported cases too; its output is recorded.
  auto gx = grp::make_group(c.q, 3), gy = grp::make_group(c.q, 2);
  auto sx = socle_of(c.q, c.ell, c.e1, 0, seed, gx);
  auto sy = socle_of(c.q, c.ell, c.e1, 0, seed, gy);
  auto ox = classify::observe(gx, sx.composition), oy = classify::observe(gy, sy.composition);
  j["observed_x"] = report::observation_json(ox)["factors"];
  j["observed_y"] = report::observation_json(oy)["factors"];
  if (status != "supported") return j;
  auto dx = classify::compare_finite(*px, ox, &sx), dy = classify::compare_finite(*py, oy, &sy);
  for (const auto& s : dx) note("U(2,1): " + s);
  for (const auto& s : dy) note("U(1,1): " + s);
  auto b = classify::bridge_check(d, ox, oy);
  for (const auto& s : b.problems) note("bridge: " + s);
  j["finite_diffs"] = {{"x", dx}, {"y", dy}};
  j["bridge"] = report::bridge_json(b);
  return j;
}

void a10(const Options& opt, CriterionResult& out) {
  auto cases = grid();
  std::vector<Json> results(cases.size());
  std::vector<std::vector<std::string>> diffs(cases.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = run_grid_case(cases[i], opt.seed, diffs[i]);
    } catch (const Error& e) {
      diffs[i].push_back(cases[i].key() + ": " + error_code_name(e.code()) + ": " + e.what());
      results[i] = {{"status", "error"}};
    }
  };
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    while (next < cases.size() || !pending.empty()) {
      while (next < cases.size() && pending.size() < opt.jobs) pending.push_back(std::async(std::launch::async, work, next++));
      pending.front().get();
      pending.erase(pending.begin());
    }
  }
  Json by_key = Json::object();
  std::size_t supported = 0, unsupported = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    by_key[cases[i].key()] = results[i];
    (results[i]["status"] == "supported" ? supported : unsupported)++;
  }
  // Diffs in key order, so the output does not depend on scheduling.
  std::vector<std::size_t> order(cases.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cases[a].key() < cases[b].key(); });
  for (auto i : order) out.diffs.insert(out.diffs.end(), diffs[i].begin(), diffs[i].end());
  out.detail = {{"seed", opt.seed}, {"cases", by_key}, {"supported", supported}, {"unsupported", unsupported}};
}

const std::map<std::string, ChopCase>& chop_cases() {
  static const std::map<std::string, ChopCase> m{
      {"A2", {3, 3, 5, 0, {{1, 1}, {27, 1}}, {{1, 27}}, std::nullopt, true, std::nullopt}},
      {"A3", {3, 3, 7, 0, {{1, 2}, {26, 1}}, {{1}, {26}, {1}}, true, std::nullopt, std::nullopt}},
      {"A4", {3, 3, 2, 0, {{1, 2}, {6, 2}, {14, 1}}, {{1}, {6}, {14}, {6}, {1}}, true, std::nullopt, 6}},
      {"A5", {5, 3, 2, 0, {{1, 2}, {20, 1}, {104, 1}}, {}, std::nullopt, std::nullopt, std::nullopt}},
      {"A6", {3, 2, 2, 0, {{1, 2}, {2, 1}}, {{1}, {2}, {1}}, true, std::nullopt, std::nullopt}},
      {"A7", {5, 3, 3, 12, {{21, 2}, {84, 1}}, {{21}, {84}, {21}}, true, std::nullopt, 21}},
  };
  return m;
}

const Spec& spec_of(const std::string& id) {
  for (const auto& s : specs())
    if (id == s.id) return s;
  fail(ErrorCode::InvalidArgument, "unknown criterion " + id);
}

Json criterion_json(const CriterionResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"limit_seconds", r.limit_seconds},
          {"detail", r.detail}, {"diffs", r.diffs}};
}

// JSON of A1..A10, the object compared by the determinism check.
std::string body(const std::vector<CriterionResult>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs)
    if (r.id != "A11") arr.push_back(criterion_json(r));
  return arr.dump();
}

std::vector<CriterionResult> run_ids(const std::vector<std::string>& ids, const Options& opt) {
  std::vector<CriterionResult> out;
  for (const auto& id : ids) out.push_back(run_criterion(id, opt));
  return out;
}

std::vector<std::string> base_ids() {
  std::vector<std::string> v;
  for (const auto& s : specs())
    if (std::string(s.id) != "A11") v.push_back(s.id);
  return v;
}

void a11(const std::vector<CriterionResult>* first, const Options& opt, CriterionResult& out) {
  auto ids = base_ids();
  std::string one = first ? body(*first) : body(run_ids(ids, opt));
  std::string two = body(run_ids(ids, opt));
  out.detail = {{"runs", 2}, {"seed", opt.seed}, {"bytes", one.size()}, {"identical", one == two}};
  if (one != two) out.diffs.push_back("two runs with the same seed differ");
}

template <class F>
CriterionResult timed(const std::string& id, F&& body_fn) {
  const auto& s = spec_of(id);
  CriterionResult r;
  r.id = s.id;
  r.title = s.title;
  r.limit_seconds = s.limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body_fn(r);
  } catch (const Error& e) {
    r.diffs.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.diffs.empty();
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

bool known_suite(const std::string& name) { return name == "desk"; }

CriterionResult run_criterion(const std::string& id, const Options& opt) {
  return timed(id, [&](CriterionResult& r) {
    if (id == "A1") return a1(r);
    if (id == "A8") return a8(opt.seed, r);
    if (id == "A9") return a9(r);
    if (id == "A10") return a10(opt, r);
    if (id == "A11") return a11(nullptr, opt, r);
    run_chop(chop_cases().at(id), opt.seed, r);
  });
}

SuiteResult run(const std::string& suite, const Options& opt) {
  if (!known_suite(suite)) fail(ErrorCode::InvalidArgument, "unknown suite " + suite);
  auto ids = opt.only.empty() ? criterion_ids() : opt.only;
  for (const auto& id : ids) spec_of(id);
  SuiteResult s;
  s.suite = suite;
  s.seed = opt.seed;
  for (const auto& id : ids)
    if (id != "A11") s.criteria.push_back(run_criterion(id, opt));
  if (std::find(ids.begin(), ids.end(), "A11") != ids.end()) {
    bool full = s.criteria.size() == base_ids().size();
    s.criteria.push_back(timed("A11", [&](CriterionResult& r) { a11(full ? &s.criteria : nullptr, opt, r); }));
  }
  return s;
}

bool SuiteResult::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.ok(); });
}

Json SuiteResult::to_json() const {
  Json arr = Json::array();
  bool exact = true;
  for (const auto& r : criteria) {
    arr.push_back(criterion_json(r));
    exact = exact && r.pass;
  }
  return {{"suite", suite}, {"seed", seed}, {"pass", exact}, {"criteria", arr}};
}

std::string SuiteResult::text() const {
  std::ostringstream os;
  os << "suite " << suite << " seed " << seed << "\n";
  for (const auto& r : criteria) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    os << (r.ok() ? "PASS " : "FAIL ") << r.id << " " << r.title << " (" << buf;
    if (r.limit_seconds > 0) os << " / " << r.limit_seconds << "s";
    os << ")";
    if (!r.within_limit()) os << " over budget";
    os << "\n";
    for (const auto& d : r.diffs) os << "  - " << d << "\n";
  }
  os << (all_pass() ? "all criteria pass" : "some criteria fail") << "\n";
  return os.str();
}

}  // namespace u21::verify
