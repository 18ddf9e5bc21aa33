// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/report.hpp"

#include <algorithm>

namespace u21::report {

namespace {

Json layers_json(const std::vector<std::vector<std::pair<int, std::size_t>>>& layers) {
  Json out = Json::array();
  for (const auto& l : layers) {
    Json row = Json::array();
    for (auto [id, m] : l) row.push_back({{"id", id}, {"multiplicity", m}});
    out.push_back(row);
  }
  return out;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json field_json(const gf::Field& f) {
  return {{"p", f.characteristic()}, {"m", f.degree()}, {"order", f.order()}, {"modulus", f.modulus()}};
}

Json group_json(const grp::GroupSpec& g, bool enumerate) {
  Json j;
  j["rank"] = g.rank;
  j["q"] = g.q0;
  j["name"] = g.rank == 3 ? "U(2,1)" : "U(1,1)";
  j["entry_field"] = field_json(*g.field);
  j["generators"] = g.generator_names;
  const auto formula = grp::group_order_formula(g.q0, g.rank);
  j["order_formula"] = formula;
  if (g.rank == 2) {
    j["candidates"] = {{"q(q-1)(q+1)", grp::special_unitary_order_rank2(g.q0)}, {"q(q-1)(q+1)^2", formula}};
  }
  auto flags = grp::flag_table(g);
  j["flags"] = flags.size();
  if (enumerate) {
    auto elems = grp::enumerate(g);
    j["order_bfs"] = elems.size();
    j["bfs_equals_formula"] = elems.size() == formula;
    if (g.rank == 2) {
      Json m;
      for (auto& [k, v] : j["candidates"].items()) m[k] = v.get<std::uint64_t>() == elems.size();
      j["bfs_matches"] = m;
    }
    std::size_t borel = 0;
    for (const auto& x : elems) borel += grp::borel_membership(g, x, nullptr);
    j["borel_order_bfs"] = borel;
    j["index_consistent"] = borel != 0 && elems.size() % borel == 0 && elems.size() / borel == flags.size();
  }
  return j;
}

Json character_json(const modrep::TorusCharacter& chi) {
  return {{"q", chi.q0},           {"ell", chi.ell},        {"e1_input", chi.e1_input}, {"e2_input", chi.e2_input},
          {"e1", chi.e1},          {"e2", chi.e2},          {"ord1", chi.ord1},         {"ord2", chi.ord2},
          {"coeff_field", field_json(*chi.coeff)}};
}

Json module_summary_json(const modrep::FlatModule& m) {
  return {{"field", field_json(*m.field)}, {"dim", m.dim}, {"ngens", m.gens.size()}, {"label", m.label}};
}

Json composition_json(const meataxe::CompositionReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    const auto& w = r.representatives[f.id].witness;
    factors.push_back({{"id", f.id},
                       {"dim", f.dim},
                       {"multiplicity", f.multiplicity},
                       {"witness", {{"element", w.element.describe()}, {"factor", w.factor}, {"nullity", w.nullity}}}});
  }
  return {{"field", field_json(*r.field)}, {"dim", r.dim},     {"seed", r.seed},
          {"length", r.total_length},      {"factors", factors}};
}

std::vector<std::size_t> layer_dims(const meataxe::SocleReport& s, std::size_t layer) {
  std::vector<std::size_t> d;
  for (auto [id, m] : s.layers.at(layer))
    for (std::size_t k = 0; k < m; ++k) d.push_back(s.composition.factors[id].dim);
  std::sort(d.begin(), d.end());
  return d;
}

Json socle_json(const meataxe::SocleReport& s) {
  Json dims = Json::array();
  for (std::size_t i = 0; i < s.layers.size(); ++i) dims.push_back(layer_dims(s, i));
  return {{"composition", composition_json(s.composition)},
          {"layers", layers_json(s.layers)},
          {"layer_dims", dims},
          {"uniserial", s.uniserial},
          {"semisimple", s.semisimple}};
}

Json end_json(const meataxe::EndAlgebra& e) {
  return {{"field", field_json(*e.field)}, {"dim", e.dim}, {"structure", e.structure}};
}

Json quadratic_json(const meataxe::QuadraticParameter& qp) {
  return {{"d", qp.d},   {"exponent", qp.exponent}, {"lambda1", qp.lambda1},
          {"lambda2", qp.lambda2}, {"c1", qp.c1},   {"c0", qp.c0}};
}

Json hecke_json(const hecke::HeckePresentation& p) {
  auto rel = [](const hecke::QuadraticRelation& r) {
    return Json{{"generator", r.generator}, {"c1", r.c1}, {"c0", r.c0}};
  };
  Json chars = Json::array();
  for (const auto& c : hecke::characters(p))
    chars.push_back({{"name", c.name}, {"aliases", c.aliases}, {"value_x", c.value_x}, {"value_y", c.value_y}});
  return {{"q", p.params.q},
          {"a", p.params.a},
          {"ell", p.params.ell},
          {"relations", {rel(p.rel_x), rel(p.rel_y)}},
          {"fx_at_one", p.fx_at_one.str()},
          {"fy_at_one", p.fy_at_one.str()},
          {"characters", chars},
          {"count", chars.size()},
          {"collapse", hecke::collapse_name(hecke::collapse_case(p))}};
}

Json laurent_json(const hecke::LaurentAlgebra& l) {
  return {{"q", l.q}, {"ell", l.ell}, {"description", l.description()}};
}

Json label_json(const classify::Label& l) {
  Json j{{"kind", l.kind},
         {"param", l.param},
         {"name", l.str()},
         {"dim_ladic", opt(l.dim_ladic)},
         {"dim_mod", opt(l.dim_mod)},
         {"cuspidal", l.cuspidal}};
  if (!l.inner.empty()) j["inner"] = label_json(l.inner[0]);
  return j;
}

Json structure_json(const classify::StructureReport& r) {
  Json factors = Json::array();
  for (const auto& [l, m] : r.factors) factors.push_back({{"label", label_json(l)}, {"multiplicity", m}});
  Json flags{{"uniserial", opt(r.uniserial)},
             {"semisimple", opt(r.semisimple)},
             {"sub_iso_quotient", opt(r.sub_iso_quotient)},
             {"has_cuspidal", r.has_cuspidal}};
  Json j{{"scope", r.scope},       {"rank", r.rank},       {"q", r.q},
         {"ell", r.ell},           {"reducible", r.reducible}, {"length", r.length},
         {"factors", factors},     {"layers", layers_json(r.layers)}, {"flags", flags},
         {"unique_sub", opt(r.unique_sub)}, {"unique_quotient", opt(r.unique_quotient)},
         {"clause", r.clause},     {"notes", r.notes}};
  if (r.scope == "finite") j["total_dim"] = r.total_dim();
  return j;
}

Json descriptor_json(const classify::PadicCharDescriptor& d) {
  return {{"level", d.level == classify::Level::Zero ? "zero" : "positive"},
          {"chi1", classify::chi1_class_name(d.chi1)},
          {"chi2_absorbed", d.chi2_absorbed},
          {"q", d.q},
          {"ell", d.ell}};
}

Json dimension_table_json(const classify::DimensionTable& t) {
  Json dims, counts;
  for (const auto& v : t.dims) dims[v.name] = v.value;
  for (const auto& v : t.counts) counts[v.name] = v.value;
  return {{"q", t.q}, {"dims", dims}, {"counts", counts}};
}

Json observation_json(const classify::FiniteObservation& o) {
  Json factors = Json::array();
  for (const auto& f : o.factors)
    factors.push_back({{"dim", f.dim}, {"multiplicity", f.multiplicity}, {"cuspidal", f.cuspidal}});
  return {{"rank", o.rank}, {"q", o.q}, {"ell", o.ell}, {"factors", factors}};
}

Json bridge_json(const classify::BridgeResult& b) { return {{"ok", b.ok}, {"problems", b.problems}}; }

Json error_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", error_code_name(code)}, {"status", (int)code}, {"message", message}}}};
}

}  // namespace u21::report
