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

#include <cmath>

#include "fpdim/catalog.hpp"
#include "oracles.hpp"

using namespace fpdim;

namespace {

Polynomial from_ints(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

}  // namespace

TEST_CASE("left multiplication matrices") {
    const auto f2 = get_builtin("rep_f2_z3").data;
    CHECK(left_mult_matrix(Element::basis(f2, "v")) == RationalMatrix{{0, 2}, {1, 1}});
    CHECK(left_mult_matrix(Element::unit(f2)) == RationalMatrix::identity(2));
    const auto fib = get_builtin("fib").data;
    CHECK(left_mult_matrix(Element::basis(fib, "x")) == RationalMatrix{{0, 1}, {1, 1}});
    for (const auto& name : list_builtins()) {
        const auto d = get_builtin(name).data;
        for (std::size_t x = 0; x < d->rank(); ++x) CHECK(left_mult_matrix(Element::basis(d, x)) == oracle::left_matrix(*d, x));
    }
}

TEST_CASE("FPdims of simples") {
    const auto f2 = get_builtin("rep_f2_z3").data;
    const AlgebraicNumber v = fpdim_element(Element::basis(f2, "v"));
    CHECK(v.is_exact());
    CHECK(v.lo() == 2);
    CHECK(char_poly(left_mult_matrix(Element::basis(f2, "v"))) == from_ints({-2, -1, 1}));
    CHECK(fpdim_element(Element::unit(f2)).lo() == 1);
    const auto q8 = get_builtin("rep_r_q8").data;
    CHECK(fpdim_element(Element::basis(q8, "h")).lo() == 4);
    CHECK(fpdim_element(Element::zero(q8)).lo() == 0);
}

TEST_CASE("FPdims agree with power iteration") {
    for (const auto& name : list_builtins()) {
        const auto d = get_builtin(name).data;
        if (!d->is_fusion()) continue;
        const auto dims = fpdim_simples(d);
        for (std::size_t x = 0; x < d->rank(); ++x) {
            const long double approx = oracle::perron_by_power_iteration(oracle::left_matrix(*d, x));
            CHECK(std::fabs(static_cast<double>(approx) - dims[x].lo().get_d()) < 1e-9);
        }
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(fpdim_simples(get_builtin("m2_vec").data), Error);
    using V3 = std::vector<std::vector<std::vector<Int>>>;
    V3 n(2, std::vector<std::vector<Int>>(2, std::vector<Int>(2, Int(0))));
    n[0][0][0] = 1;
    n[0][1][1] = 1;
    n[1][0][1] = 1;
    n[1][1][1] = 1;
    const auto e = share(FusionData("idem", {"1", "e"}, n, {0, 1}, {Int(1), Int(1)}, Int(1), {0}));
    // e*e has no unit summand, so the duality axiom fails first.
    try {
        fpdim_simples(e);
        FAIL("expected invalid data");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Invalid);
    }
}

TEST_CASE("the transitivity waiver does not bypass structural checks") {
    using V3 = std::vector<std::vector<std::vector<Int>>>;
    V3 n(2, std::vector<std::vector<Int>>(2, std::vector<Int>(2, Int(0))));
    n[0][0][0] = 1;
    n[0][1][1] = 1;
    n[1][0][1] = 1;
    n[1][1][1] = 1;
    const auto e = share(FusionData("idem", {"1", "e"}, n, {0, 1}, {Int(1), Int(1)}, Int(1), {0}));
    FpOptions waived;
    waived.waive_transitivity = true;
    try {
        fpdim_element(Element::basis(e, "e"), waived);
        FAIL("expected invalid data");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Invalid);
    }
}

TEST_CASE("precision only changes interval widths") {
    const auto fib = get_builtin("fib").data;
    FpOptions coarse;
    coarse.width = power_of_two_width(8);
    const AlgebraicNumber a = fpdim_element(Element::basis(fib, "x"), coarse);
    const AlgebraicNumber b = fpdim_element(Element::basis(fib, "x"));
    CHECK(a.width() <= power_of_two_width(8));
    CHECK(b.width() <= power_of_two_width(64));
    CHECK(min_poly(a) == min_poly(b));
    CHECK(compare(a, b) == 0);
}
