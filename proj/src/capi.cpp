// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/u21.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>

#include "u21/report.hpp"
#include "u21/verify.hpp"

using namespace u21;

struct u21_group {
  grp::GroupSpec spec;
};
struct u21_module {
  modrep::FlatModule m;
};
struct u21_verify {
  verify::SuiteResult result;
};

namespace {

thread_local std::string last_error;

// Runs fn, mapping exceptions to status codes and the thread's last error.
template <class F>
int guard(F&& fn) {
  try {
    fn();
    last_error.clear();
    return U21_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return (int)e.code();
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return U21_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const report::Json& j, char** out) {
  need(out, "output pointer");
  *out = dup(j.dump());
}

std::uint32_t q0_from_label(const std::string& label) {
  auto pos = label.find("q0=");
  if (pos == std::string::npos) fail(ErrorCode::InvalidArgument, "module label has no q0; pass it explicitly");
  return (std::uint32_t)std::strtoul(label.c_str() + pos + 3, nullptr, 10);
}

}  // namespace

extern "C" {

const char* u21_version(void) { return "1.0.0"; }

const char* u21_status_name(int status) {
  if (status < 0 || status > (int)ErrorCode::Internal) return "Unknown";
  return error_code_name((ErrorCode)status);
}

const char* u21_last_error(void) { return last_error.c_str(); }

void u21_string_free(char* s) { std::free(s); }

int u21_group_create(uint32_t q, int rank, u21_group** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new u21_group{grp::make_group(q, rank)};
  });
}

void u21_group_free(u21_group* g) { delete g; }

int u21_group_report(const u21_group* g, int enumerate, char** json) {
  return guard([&] {
    need(g, "group");
    emit(report::group_json(g->spec, enumerate != 0), json);
  });
}

int u21_module_induce(const u21_group* g, uint32_t ell, int64_t e1, int64_t e2, u21_module** out) {
  return guard([&] {
    need(g, "group");
    need(out, "output pointer");
    auto t = grp::flag_table(g->spec);
    auto chi = modrep::torus_character(g->spec.q0, e1, e2, ell);
    *out = new u21_module{modrep::induced_module(g->spec, t, chi)};
  });
}

int u21_module_load(const char* path, u21_module** out) {
  return guard([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new u21_module{modrep::load_fmod(path)};
  });
}

int u21_module_save(const u21_module* m, const char* path) {
  return guard([&] {
    need(m, "module");
    need(path, "path");
    modrep::save_fmod(path, m->m);
  });
}

void u21_module_free(u21_module* m) { delete m; }

int u21_module_info(const u21_module* m, char** json) {
  return guard([&] {
    need(m, "module");
    emit(report::module_summary_json(m->m), json);
  });
}

int u21_module_chop(const u21_module* m, uint64_t seed, char** json) {
  return guard([&] {
    need(m, "module");
    emit(report::composition_json(meataxe::chop(meataxe::from_flat(m->m), seed)), json);
  });
}

int u21_module_socle(const u21_module* m, uint64_t seed, char** json) {
  return guard([&] {
    need(m, "module");
    emit(report::socle_json(meataxe::socle_series(meataxe::from_flat(m->m), seed)), json);
  });
}

int u21_module_end(const u21_module* m, int quadratic, uint32_t q0, char** json) {
  return guard([&] {
    need(m, "module");
    auto e = meataxe::endomorphism_algebra(meataxe::from_flat(m->m));
    auto j = report::end_json(e);
    if (quadratic) {
      if (q0 == 0) q0 = q0_from_label(m->m.label);
      j["q0"] = q0;
      j["quadratic"] = report::quadratic_json(meataxe::quadratic_parameter(e, q0));
    }
    emit(j, json);
  });
}

int u21_hecke(uint32_t q, int a, uint32_t ell, char** json) {
  return guard([&] { emit(report::hecke_json(hecke::presentation(q, a, ell)), json); });
}

int u21_classify_finite(uint32_t q, uint32_t ell, int64_t e1, int64_t e2, int rank, char** json) {
  return guard([&] { emit(report::structure_json(classify::finite_ps_structure(q, ell, e1, e2, rank)), json); });
}

int u21_classify_padic(const char* level, const char* chi1, int chi2_absorbed, uint32_t q, uint32_t ell,
                       char** json) {
  return guard([&] {
    need(level, "level");
    need(chi1, "chi1");
    classify::PadicCharDescriptor d;
    std::string lv = level;
    if (lv == "zero")
      d.level = classify::Level::Zero;
    else if (lv == "positive")
      d.level = classify::Level::Positive;
    else
      fail(ErrorCode::InvalidArgument, "level must be zero or positive");
    auto c = classify::parse_chi1_class(chi1);
    if (!c) fail(ErrorCode::InvalidArgument, std::string("unknown chi1 class ") + chi1);
    d.chi1 = *c;
    d.chi2_absorbed = chi2_absorbed != 0;
    d.q = q;
    d.ell = ell;
    auto j = report::structure_json(classify::padic_ps_structure(d));
    j["descriptor"] = report::descriptor_json(d);
    j["collapsed"] = report::descriptor_json(classify::collapse(d));
    emit(j, json);
  });
}

int u21_dimension_table(uint32_t q, char** json) {
  return guard([&] { emit(report::dimension_table_json(classify::ladic_dimension_table(q)), json); });
}

int u21_verify_run(const char* suite, uint64_t seed, unsigned jobs, const char* only, u21_verify** out) {
  return guard([&] {
    need(suite, "suite");
    need(out, "output pointer");
    verify::Options opt;
    opt.seed = seed;
    opt.jobs = jobs;
    if (only) {
      std::stringstream ss(only);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!id.empty()) opt.only.push_back(id);
    }
    *out = new u21_verify{verify::run(suite, opt)};
  });
}

void u21_verify_free(u21_verify* v) { delete v; }

int u21_verify_passed(const u21_verify* v) { return v && v->result.all_pass() ? 1 : 0; }

int u21_verify_json(const u21_verify* v, char** json) {
  return guard([&] {
    need(v, "verify result");
    emit(v->result.to_json(), json);
  });
}

int u21_verify_text(const u21_verify* v, char** text) {
  return guard([&] {
    need(v, "verify result");
    need(text, "output pointer");
    *text = dup(v->result.text());
  });
}

}  // extern "C"
