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

#include <set>

#include "fpdim/catalog.hpp"
#include "fpdim/validate.hpp"

using namespace fpdim;

TEST_CASE("catalog listing") {
    const auto names = list_builtins();
    const std::set<std::string> set(names.begin(), names.end());
    for (const char* n : {"vec_z2", "vec_z3", "vec_s3", "rep_r_q8", "rep_f2_z3", "fib", "cc_bim", "gal7", "jj_bim", "m2_vec"})
        CHECK(set.count(n) == 1);
    CHECK(names == list_builtins());
    CHECK_THROWS_AS(get_builtin("nope"), Error);
}

TEST_CASE("every fixture validates") {
    for (const auto& name : list_builtins()) {
        const FixtureEntry e = get_builtin(name);
        CAPTURE(name);
        CHECK(e.name == name);
        CHECK(e.data->name() == name);
        CHECK_FALSE(e.provenance.empty());
        CHECK(check_structural(*e.data).passed());
        if (!e.data->is_fusion()) continue;
        CHECK(check_eps_consistency(*e.data).passed());
        CHECK(check_transitivity(*e.data).passed());
        check_annotation(*e.data, e.annotated().annotation);
    }
}

TEST_CASE("fixture data") {
    const auto q8 = get_builtin("rep_r_q8").data;
    CHECK(q8->rank() == 5);
    CHECK(q8->eps_values() == std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(4)});
    const Element h = Element::basis(q8, "h");
    const Element sum4 = (Element::basis(q8, "1") + Element::basis(q8, "a") + Element::basis(q8, "b") + Element::basis(q8, "c")).scaled(Int(4));
    CHECK(multiply(h, h) == sum4);

    const auto jj = get_builtin("jj_bim").data;
    CHECK(jj->endo_degree() == 3);
    CHECK(jj->eps(1) == 2);
    CHECK(jj->N(1, 1, 0) == jj->eps(1));
}

TEST_CASE("rep_f2_z3 and jj_bim share the semiring but not d") {
    const auto a = get_builtin("rep_f2_z3").data;
    const auto b = get_builtin("jj_bim").data;
    CHECK(a->rank() == b->rank());
    for (std::size_t i = 0; i < a->rank(); ++i) {
        CHECK(a->eps(i) == b->eps(i));
        CHECK(a->dual(i) == b->dual(i));
        for (std::size_t j = 0; j < a->rank(); ++j)
            for (std::size_t k = 0; k < a->rank(); ++k) CHECK(a->N(i, j, k) == b->N(i, j, k));
    }
    CHECK(a->endo_degree() == 1);
    CHECK(b->endo_degree() == 3);
}
