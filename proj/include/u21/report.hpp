// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <string>

#include "json.hpp"
#include "u21/classify.hpp"
#include "u21/error.hpp"
#include "u21/grp.hpp"
#include "u21/hecke.hpp"
#include "u21/meataxe.hpp"
#include "u21/modrep.hpp"

// JSON renderings of the result types. Objects use sorted keys, so dump()
// is canonical.
namespace u21::report {

using Json = nlohmann::json;

Json field_json(const gf::Field& f);
// Formula order, and the BFS order when enumerate is set. Rank 2 also lists
// both closed-form candidates.
Json group_json(const grp::GroupSpec& g, bool enumerate);
Json character_json(const modrep::TorusCharacter& chi);
Json module_summary_json(const modrep::FlatModule& m);
Json composition_json(const meataxe::CompositionReport& r);
Json socle_json(const meataxe::SocleReport& s);
Json end_json(const meataxe::EndAlgebra& e);
Json quadratic_json(const meataxe::QuadraticParameter& qp);
Json hecke_json(const hecke::HeckePresentation& p);
Json laurent_json(const hecke::LaurentAlgebra& l);
Json label_json(const classify::Label& l);
Json structure_json(const classify::StructureReport& r);
Json descriptor_json(const classify::PadicCharDescriptor& d);
Json dimension_table_json(const classify::DimensionTable& t);
Json observation_json(const classify::FiniteObservation& o);
Json bridge_json(const classify::BridgeResult& b);
Json error_json(ErrorCode code, const std::string& message);

// Dimensions of a socle layer, sorted.
std::vector<std::size_t> layer_dims(const meataxe::SocleReport& s, std::size_t layer);

}  // namespace u21::report
