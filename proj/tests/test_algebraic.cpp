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

#include "fpdim/algebraic.hpp"
#include "fpdim/error.hpp"

using namespace fpdim;

namespace {

Polynomial from_ints(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

Rational ten_to_minus(unsigned k) {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return Rational(Int(1), den);
}

Rational decimal(const char* s, unsigned digits) {
    Int num(s);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("isolating the largest real root") {
    const AlgebraicNumber two = isolate_max_real_root(from_ints({-2, -1, 1}));
    CHECK(two.is_exact());
    CHECK(two.lo() == 2);
    CHECK(isolate_max_real_root(from_ints({-1, 1})).lo() == 1);

    const AlgebraicNumber phi = isolate_max_real_root(from_ints({-1, -1, 1}));
    CHECK_FALSE(phi.is_exact());
    CHECK(phi.width() <= power_of_two_width(64));
    CHECK(min_poly(phi) == from_ints({-1, -1, 1}));
    CHECK(std::fabs(phi.lo().get_d() - 1.6180339887498949) < 1e-15);
}

TEST_CASE("refinement") {
    const AlgebraicNumber phi = isolate_max_real_root(from_ints({-1, -1, 1}));
    const AlgebraicNumber r = refine(phi, ten_to_minus(12));
    CHECK(r.width() <= ten_to_minus(12));
    // phi = 1.6180339887498948...
    CHECK(r.lo() > decimal("1618033988748", 12));
    CHECK(r.hi() < decimal("1618033988750", 12));
    CHECK(to_decimal(r.hi(), 12).rfind("1.618033988749", 0) == 0);
    const AlgebraicNumber twice = refine(refine(phi, ten_to_minus(6)), ten_to_minus(12));
    CHECK(compare(twice, r) == 0);
    CHECK(twice.width() <= ten_to_minus(12));
    const AlgebraicNumber two = AlgebraicNumber::rational(2);
    CHECK(refine(two, ten_to_minus(3)).is_exact());
}

TEST_CASE("exact comparison") {
    const AlgebraicNumber phi = isolate_max_real_root(from_ints({-1, -1, 1}));
    const AlgebraicNumber sqrt5 = isolate_max_real_root(from_ints({-5, 0, 1}));
    CHECK(compare(phi, sqrt5) < 0);
    CHECK(compare(phi, AlgebraicNumber::rational(Rational(8, 5))) > 0);
    CHECK(compare(phi, AlgebraicNumber::rational(Rational(13, 8))) < 0);
    // phi = (1 + sqrt5) / 2 built another way.
    const AlgebraicNumber other(from_ints({-1, -1, 1}), Rational(3, 2), Rational(2));
    CHECK(compare(phi, other) == 0);
}

TEST_CASE("scaling, products and reciprocals") {
    const AlgebraicNumber phi = isolate_max_real_root(from_ints({-1, -1, 1}));
    const AlgebraicNumber half = scale(phi, Rational(1, 2));
    CHECK(min_poly(half) == Polynomial{Rational(-1, 4), Rational(-1, 2), Rational(1)});
    const AlgebraicNumber sq = product(phi, phi);
    CHECK(min_poly(sq) == from_ints({1, -3, 1}));  // phi^2 = phi + 1
    const AlgebraicNumber inv = reciprocal(phi);
    CHECK(compare(inv, AlgebraicNumber(from_ints({-1, 1, 1}), Rational(0), Rational(1))) == 0);  // 1/phi = phi - 1
    const AlgebraicNumber r2 = isolate_max_real_root(from_ints({-2, 0, 1}));
    const AlgebraicNumber two = product(r2, r2);
    CHECK(two.is_exact());
    CHECK(two.lo() == 2);
    CHECK(product(r2, reciprocal(r2)).is_exact());
    CHECK_THROWS_AS(scale(phi, Rational(0)), Error);
}

TEST_CASE("algebraic integers") {
    CHECK(is_algebraic_integer(isolate_max_real_root(from_ints({-1, -1, 1}))));
    CHECK_FALSE(is_algebraic_integer(AlgebraicNumber::rational(Rational(3, 2))));
    CHECK(is_algebraic_integer(AlgebraicNumber::rational(3)));
}

TEST_CASE("conjugate enclosures") {
    const ConjugateEnclosure c = conjugate_enclosure(from_ints({-1, -1, 1}));
    REQUIRE(c.roots.size() == 2);
    CHECK(c.max_modulus_bound == doctest::Approx(1.6180339887).epsilon(1e-9));
    const ConjugateEnclosure z = conjugate_enclosure(from_ints({1, 0, 1}));  // +-i
    for (const auto& r : z.roots) CHECK(std::abs(r) == doctest::Approx(1.0));
}

TEST_CASE("interval arithmetic") {
    const Interval a{Rational(1), Rational(2)}, b{Rational(-1), Rational(3)};
    CHECK((a * b).lo == -2);
    CHECK((a * b).hi == 6);
    CHECK((a - a).lo == -1);
    CHECK_THROWS_AS(a / b, Error);
    CHECK(max_distance(a, Interval::point(3)) == 2);
}
