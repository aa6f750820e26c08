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

#include <doctest.h>

#include "fpdim/io.hpp"
#include "fpdim/validate.hpp"

using namespace fpdim;

TEST_CASE("catalog fixtures round-trip byte for byte") {
    for (const auto& name : list_builtins()) {
        CAPTURE(name);
        const FixtureEntry e = get_builtin(name);
        const std::string text = emit_fusion_file(e);
        const FixtureEntry back = parse_fusion_file(text);
        CHECK(back.data->same_content(*e.data));
        CHECK(emit_fusion_file(back) == text);
        CHECK(back.provenance == e.provenance);
        CHECK(back.galois.has_value() == e.galois.has_value());
        CHECK(back.description.has_value() == e.description.has_value());
    }
}

TEST_CASE("defaults and omitted entries") {
    const char* text = R"({
      "name": "z2",
      "simples": [{"label": "1"}, {"label": "g"}],
      "fusion": {"1|1": {"1": 1}, "1|g": {"g": 1}, "g|1": {"g": 1}, "g|g": {"1": 1}}
    })";
    const FixtureEntry e = parse_fusion_file(text);
    CHECK(e.data->rank() == 2);
    CHECK(e.data->endo_degree() == 1);
    CHECK(e.data->unit_index() == 0);
    CHECK(e.data->N(1, 1, 1) == 0);
    CHECK(check_structural(*e.data).passed());
    CHECK_FALSE(e.galois.has_value());
}

TEST_CASE("schema errors") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_fusion_file(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Invalid;  // marker for "no error"
    };
    CHECK(kind_of(R"({"simples": [{"label": "1", "endo_dim": 0}], "fusion": {"1|1": {"1": 1}}})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"simples": [{"label": "1"}, {"label": "1"}], "fusion": {}})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"simples": [{"label": "1"}], "fusion": {"1|1": {"1": -1}}})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"simples": [{"label": "1"}], "fusion": {"1|1": {"1": 1.5}}})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"simples": [{"label": "1"}], "fusion": {"1|x": {"1": 1}}})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"simples": [{"label": "1"}], )") == ErrorKind::Schema);
    try {
        parse_fusion_file("{\n  \"simples\": [\n  ,\n]}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("a non-involutive dual parses and is caught by validation") {
    const char* text = R"({
      "name": "z3_bad",
      "simples": [{"label": "1", "dual": "1"}, {"label": "g", "dual": "g"}, {"label": "g2", "dual": "g"}],
      "fusion": {"1|1": {"1": 1}, "1|g": {"g": 1}, "1|g2": {"g2": 1}, "g|1": {"g": 1}, "g|g": {"g2": 1},
                 "g|g2": {"1": 1}, "g2|1": {"g2": 1}, "g2|g": {"1": 1}, "g2|g2": {"g": 1}}
    })";
    const FixtureEntry e = parse_fusion_file(text);
    const ValidationReport r = check_structural(*e.data);
    REQUIRE_FALSE(r.passed());
    bool named = false;
    for (const auto& v : r.violations)
        if (v.rule == kRuleInvolution && v.message.find("g2") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("rationals and algebraic values") {
    CHECK(rational_string(Rational(3)) == "3");
    CHECK(rational_string(Rational(-3, 2)) == "-3/2");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("x"), Error);
    const Json j = algebraic_to_json(fpdim_category(get_builtin("rep_f2_z3").data));
    CHECK(j["value"] == "3");
    CHECK(j["min_poly"] == Json::array({"-3", "1"}));
    CHECK(j["algebraic_integer"] == true);
}

TEST_CASE("morphism files") {
    const FixtureEntry z2 = get_builtin("vec_z2");
    const SemiringMorphism f(z2.data, z2.data, {{Int(1), Int(1)}, {Int(1), Int(1)}}, std::vector<Int>{Int(1), Int(1)});
    const std::string text = emit_morphism_file(f, z2, z2);
    const SemiringMorphism g = parse_morphism_file(text);
    CHECK(g.columns() == f.columns());
    CHECK(g.is_twisted());
    CHECK(check_homomorphism(g).passed);
    const FixtureEntry src = parse_fusion_file(emit_fusion_file(z2));
    CHECK(emit_morphism_file(g, src, src) == text);
}
