/*
   Copyright 2026 The fpdim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FPDIM_IO_HPP
#define FPDIM_IO_HPP

#include <json.hpp>
#include <string>

#include "fpdim/catalog.hpp"
#include "fpdim/morphisms.hpp"

namespace fpdim {

using Json = nlohmann::json;

/*
   Fusion file layout (keys sorted on output, no floats anywhere):

   {"name": ..., "endo_degree": d, "unit": [labels],
    "simples": [{"label", "endo_dim", "dual", "galois", "division_type"?}],
    "group": {"elements": [...], "table": [[labels]]}?,
    "fusion": {"x|y": {"z": n}},
    "center_endo_degree"?, "provenance"?, "base_field"?}

   "galois" is null, "trivial", "nontrivial" or {"group_element": label}.
   Missing fusion entries are zero, "unit" defaults to ["1"], "endo_dim" to 1,
   "dual" to the label itself and "endo_degree" to 1.
*/
FixtureEntry parse_fusion_file(const std::string& text);
FixtureEntry fusion_from_json(const Json& j);
Json fusion_to_json(const FixtureEntry& entry);
/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string emit_fusion_file(const FixtureEntry& entry);

/// {"source": <fusion file>, "target": <fusion file>,
///  "images": {"x": {"z": n}}, "twist": null | {"x": n}}
SemiringMorphism parse_morphism_file(const std::string& text);
std::string emit_morphism_file(const SemiringMorphism& f, const FixtureEntry& source, const FixtureEntry& target);

std::string rational_string(const Rational& x);
Rational parse_rational(const std::string& s);

/// {"value", "exact", "min_poly", "interval", "algebraic_integer"}.
Json algebraic_to_json(const AlgebraicNumber& a);

std::string dump_canonical(const Json& j);

}  // namespace fpdim

#endif
