// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
// Command-line front end. Uses only the C API; every result arrives as JSON.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "u21/u21.h"

using Json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 verify mismatch, 2 usage, 10 + status for
// library errors.
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kStatusBase = 10;

struct Failure {
  int status;
};

void check(int status) {
  if (status != U21_OK) throw Failure{status};
}

Json take(char* s) {
  Json j = Json::parse(s);
  u21_string_free(s);
  return j;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Group = Handle<u21_group, u21_group_free>;
using Module = Handle<u21_module, u21_module_free>;
using Verify = Handle<u21_verify, u21_verify_free>;

std::string opt_str(const Json& v) { return v.is_null() ? "-" : v.dump(); }

void print_group(const Json& j) {
  std::cout << j["name"].get<std::string>() << " q=" << j["q"] << "\n";
  std::cout << "order (formula): " << j["order_formula"] << "\n";
  if (j.contains("candidates"))
    for (auto& [k, v] : j["candidates"].items()) std::cout << "candidate " << k << ": " << v << "\n";
  if (j.contains("order_bfs")) {
    std::cout << "order (BFS): " << j["order_bfs"] << "\n";
    std::cout << "BFS equals formula: " << (j["bfs_equals_formula"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "|G|/|B| = " << j["flags"] << " flags: "
              << (j["index_consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
  } else {
    std::cout << "flags: " << j["flags"] << "\n";
  }
}

void print_composition(const Json& c) {
  std::cout << "dim " << c["dim"] << " over GF(" << c["field"]["order"] << "), seed " << c["seed"] << ", length "
            << c["length"] << "\n";
  for (const auto& f : c["factors"])
    std::cout << "  factor " << f["id"] << ": dim " << f["dim"] << " x" << f["multiplicity"] << "\n";
}

void print_socle(const Json& s) {
  print_composition(s["composition"]);
  std::cout << "socle layers (bottom first):";
  for (const auto& l : s["layer_dims"]) std::cout << " " << l.dump();
  std::cout << "\nuniserial: " << s["uniserial"] << ", semisimple: " << s["semisimple"] << "\n";
}

void print_hecke(const Json& h) {
  std::cout << "q=" << h["q"] << " a=" << h["a"] << " ell=" << h["ell"] << "\n";
  for (const auto& r : h["relations"])
    std::cout << "  " << r["generator"].get<std::string>() << "^2 = " << r["c1"] << " "
              << r["generator"].get<std::string>() << " + " << r["c0"] << "\n";
  for (const auto& c : h["characters"]) {
    std::cout << "  " << c["name"].get<std::string>() << ": f_x -> " << c["value_x"] << ", f_y -> " << c["value_y"];
    if (!c["aliases"].empty()) std::cout << " (also " << c["aliases"].dump() << ")";
    std::cout << "\n";
  }
  std::cout << h["count"] << " character" << (h["count"] == 1 ? "" : "s") << " ("
            << h["collapse"].get<std::string>() << ")\n";
}

void print_structure(const Json& r) {
  std::cout << r["scope"].get<std::string>() << " rank " << r["rank"] << " q=" << r["q"] << " ell=" << r["ell"]
            << ": " << (r["reducible"].get<bool>() ? "reducible" : "irreducible") << ", length " << r["length"]
            << "\n";
  for (const auto& f : r["factors"]) {
    std::cout << "  " << f["label"]["name"].get<std::string>() << " x" << f["multiplicity"];
    if (!f["label"]["dim_mod"].is_null()) std::cout << "  dim " << f["label"]["dim_mod"];
    if (f["label"]["cuspidal"].get<bool>()) std::cout << "  cuspidal";
    std::cout << "\n";
  }
  if (!r["layers"].empty()) {
    std::cout << "layers:";
    for (const auto& l : r["layers"]) {
      std::cout << " [";
      bool first = true;
      for (const auto& e : l) {
        std::cout << (first ? "" : ",") << e["id"];
        if (e["multiplicity"] != 1) std::cout << "x" << e["multiplicity"];
        first = false;
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
  const auto& fl = r["flags"];
  std::cout << "uniserial " << opt_str(fl["uniserial"]) << ", semisimple " << opt_str(fl["semisimple"])
            << ", sub = quotient " << opt_str(fl["sub_iso_quotient"]) << ", cuspidal subquotient "
            << fl["has_cuspidal"] << "\n";
  if (!r["unique_sub"].is_null()) std::cout << "unique sub: " << r["unique_sub"].get<std::string>() << "\n";
  if (!r["unique_quotient"].is_null())
    std::cout << "unique quotient: " << r["unique_quotient"].get<std::string>() << "\n";
  std::cout << "clause: " << r["clause"].get<std::string>() << "\n";
  for (const auto& n : r["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

void out(const Json& j, bool json, void (*render)(const Json&)) {
  if (json || !render)
    std::cout << j.dump(json ? -1 : 2) << "\n";
  else
    render(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal series of small unitary groups in non-defining characteristic"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print the JSON report");
  app.fallthrough();
  std::uint64_t seed = 42;

  std::uint32_t q = 0, ell = 0;
  int rank = 3, a = 3;
  std::int64_t e1 = 0, e2 = 0;
  bool enumerate = false, quadratic = false;
  std::string file, output;

  auto* group = app.add_subcommand("group", "group order report");
  group->add_option("--q", q, "residue field size q0")->required();
  group->add_option("--rank", rank, "3 for U(2,1), 2 for U(1,1)")->required();
  group->add_flag("--enumerate", enumerate, "also count elements by BFS");

  auto* induce = app.add_subcommand("induce", "write the induced module i_B^G(chi) as FMOD");
  induce->add_option("--q", q)->required();
  induce->add_option("--ell", ell, "coefficient characteristic")->required();
  induce->add_option("--e1", e1, "exponent of chi1")->default_val(0);
  induce->add_option("--e2", e2, "exponent of chi2")->default_val(0);
  induce->add_option("--rank", rank)->default_val(3);
  induce->add_option("-o,--output", output, "FMOD file")->required();

  auto* chop = app.add_subcommand("chop", "composition factors");
  chop->add_option("file", file)->required();
  chop->add_option("--seed", seed)->default_val(42);

  auto* socle = app.add_subcommand("socle", "socle series");
  socle->add_option("file", file)->required();
  socle->add_option("--seed", seed)->default_val(42);

  auto* end = app.add_subcommand("end", "endomorphism algebra");
  end->add_option("file", file)->required();
  end->add_flag("--quadratic", quadratic, "Hecke parameter of a two-dimensional End");
  end->add_option("--q", q, "q0 for --quadratic (default: from the module label)");

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra characters");
  hecke->add_option("--q", q)->required();
  hecke->add_option("--a", a, "exponent of the x parameter, 1 or 3")->required();
  hecke->add_option("--ell", ell, "0 for characteristic zero")->required();

  auto* classify = app.add_subcommand("classify", "predicted principal series structure");
  classify->require_subcommand(1);
  auto* finite = classify->add_subcommand("finite", "finite group U(2,1)(q) or U(1,1)(q)");
  finite->add_option("--q", q)->required();
  finite->add_option("--ell", ell)->required();
  finite->add_option("--e1", e1)->default_val(0);
  finite->add_option("--e2", e2)->default_val(0);
  finite->add_option("--rank", rank)->default_val(3);
  std::string level = "zero", chi1 = "trivial";
  bool chi2_twisted = false;
  auto* padic = classify->add_subcommand("padic", "p-adic U(2,1)");
  padic->add_option("--q", q)->required();
  padic->add_option("--ell", ell)->required();
  padic->add_option("--level", level)->check(CLI::IsMember({"zero", "positive"}))->default_val("zero");
  padic
      ->add_option("--chi1", chi1,
                   "trivial, delta_half, delta_minus_half, eta_delta_quarter, eta_delta_minus_quarter, "
                   "unitary_pullback_nontrivial, regular_other")
      ->required();
  padic->add_flag("--chi2-not-absorbed", chi2_twisted, "chi2 does not factor through det");

  auto* dims = app.add_subcommand("dims", "characteristic-zero dimension table");
  dims->add_option("--q", q)->required();

  std::string suite = "desk", only;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"desk"}))->default_val("desk");
  verify->add_option("--seed", seed)->default_val(42);
  verify->add_option("--jobs", jobs, "worker threads for grid cases")->default_val(1);
  verify->add_option("--only", only, "comma-separated criterion ids");

  classify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: Usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    char* s = nullptr;
    if (*group) {
      Group g;
      check(u21_group_create(q, rank, &g.p));
      check(u21_group_report(g.p, enumerate, &s));
      out(take(s), json, print_group);
    } else if (*induce) {
      Group g;
      Module m;
      check(u21_group_create(q, rank, &g.p));
      check(u21_module_induce(g.p, ell, e1, e2, &m.p));
      check(u21_module_save(m.p, output.c_str()));
      check(u21_module_info(m.p, &s));
      Json j = take(s);
      j["file"] = output;
      if (json)
        std::cout << j.dump() << "\n";
      else
        std::cout << "wrote " << output << ": " << j["label"].get<std::string>() << ", dim " << j["dim"] << "\n";
    } else if (*chop || *socle || *end) {
      Module m;
      check(u21_module_load(file.c_str(), &m.p));
      if (*chop) {
        check(u21_module_chop(m.p, seed, &s));
        out(take(s), json, print_composition);
      } else if (*socle) {
        check(u21_module_socle(m.p, seed, &s));
        out(take(s), json, print_socle);
      } else {
        check(u21_module_end(m.p, quadratic, q, &s));
        Json j = take(s);
        if (json) {
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "dim End = " << j["dim"] << "\n";
          if (j.contains("quadratic")) {
            const auto& qp = j["quadratic"];
            std::cout << "d = " << qp["d"] << " = " << j["q0"] << "^" << qp["exponent"] << "; T^2 = " << qp["c1"]
                      << " T + " << qp["c0"] << "\n";
          }
        }
      }
    } else if (*hecke) {
      check(u21_hecke(q, a, ell, &s));
      out(take(s), json, print_hecke);
    } else if (*finite) {
      check(u21_classify_finite(q, ell, e1, e2, rank, &s));
      out(take(s), json, print_structure);
    } else if (*padic) {
      check(u21_classify_padic(level.c_str(), chi1.c_str(), !chi2_twisted, q, ell, &s));
      out(take(s), json, print_structure);
    } else if (*dims) {
      check(u21_dimension_table(q, &s));
      out(take(s), json, nullptr);
    } else if (*verify) {
      Verify v;
      check(u21_verify_run(suite.c_str(), seed, jobs, only.empty() ? nullptr : only.c_str(), &v.p));
      if (json) {
        check(u21_verify_json(v.p, &s));
        std::cout << s << "\n";
        u21_string_free(s);
      } else {
        check(u21_verify_text(v.p, &s));
        std::cout << s;
        u21_string_free(s);
      }
      return u21_verify_passed(v.p) ? 0 : kMismatch;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << u21_status_name(f.status) << ": " << u21_last_error() << "\n";
    return kStatusBase + f.status;
  }
  return 0;
}
