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

#include <random>

#include "fpdim/factor.hpp"
#include "fpdim/matrix.hpp"
#include "oracles.hpp"

using namespace fpdim;

namespace {

Polynomial from_ints(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

Polynomial product_of(const std::vector<Polynomial>& fs) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& f : fs) p = p * f;
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial p = from_ints({-2, -1, 1});  // (t - 2)(t + 1)
    CHECK(p == Polynomial::linear_root(2) * Polynomial::linear_root(-1));
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == 0);
    CHECK(p.to_string() == "t^2 - t - 2");
    const auto [q, r] = p.divmod(Polynomial::linear_root(2));
    CHECK(q == Polynomial::linear_root(-1));
    CHECK(r.is_zero());
    CHECK(p.derivative() == from_ints({-1, 2}));
    CHECK(gcd(p, from_ints({-4, 0, 1})) == Polynomial::linear_root(2));
    CHECK(squarefree_part(p * p) == p);
    CHECK(p.scale_argument(Rational(2)) == from_ints({-2, -2, 4}));
}

TEST_CASE("Sturm counts") {
    const SturmSequence s(from_ints({-1, -1, 1}));  // t^2 - t - 1
    CHECK(s.count_real() == 2);
    CHECK(s.count(Rational(1), Rational(2)) == 1);
    CHECK(s.count(Rational(-1), Rational(0)) == 1);
    CHECK(s.count(Rational(2), Rational(5)) == 0);
    // (a, b] convention: a root at b is counted, a root at a is not.
    const SturmSequence t(from_ints({-2, -1, 1}));
    CHECK(t.count(Rational(0), Rational(2)) == 1);
    CHECK(t.count(Rational(2), Rational(3)) == 0);
}

TEST_CASE("characteristic polynomials of the worked matrices") {
    const RationalMatrix lv{{0, 2}, {1, 1}};
    CHECK(char_poly(lv) == from_ints({-2, -1, 1}));
    CHECK(char_poly(RationalMatrix::identity(2)) == from_ints({1, -2, 1}));
    const RationalMatrix lx{{0, 1}, {1, 1}};
    CHECK(char_poly(lx) == from_ints({-1, -1, 1}));
    const RationalMatrix ls{{2, 1}, {Rational(1, 2), Rational(5, 2)}};
    CHECK(char_poly(ls) == Polynomial{Rational(9, 2), Rational(-9, 2), Rational(1)});
}

TEST_CASE("char_poly agrees with determinant interpolation on random matrices") {
    std::mt19937_64 rng(20261017);
    std::uniform_int_distribution<int> entry(-6, 6), den(1, 4), size(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        RationalMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational x(entry(rng), den(rng));
                x.canonicalize();
                m(i, j) = x;
            }
        CHECK(char_poly(m) == Polynomial(oracle::char_poly_by_interpolation(m)));
    }
}

TEST_CASE("kronecker product and companion matrix") {
    const RationalMatrix a{{1, 2}, {3, 4}};
    const RationalMatrix k = kronecker(a, RationalMatrix::identity(2));
    CHECK(k.size() == 4);
    CHECK(k(0, 2) == 2);
    CHECK(k(3, 1) == 3);
    const Polynomial p = from_ints({5, -5, 1});
    CHECK(char_poly(companion(p)) == p);
}

TEST_CASE("factorization of small polynomials") {
    const auto fs = irreducible_factors(from_ints({-2, -1, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].degree() == 1);
    CHECK(is_irreducible(from_ints({-1, -1, 1})));
    CHECK(is_irreducible(from_ints({5, -5, 1})));
    CHECK_FALSE(is_irreducible(from_ints({-4, 0, 1})));
    // x^4 + 1 is irreducible over Q but splits mod every prime.
    CHECK(is_irreducible(from_ints({1, 0, 0, 0, 1})));
    // (x^2 - 2)(x^2 - 3)
    CHECK(irreducible_factors(from_ints({6, 0, -5, 0, 1})).size() == 2);
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3: degree 4, irreducible.
    CHECK(is_irreducible(from_ints({1, 0, -10, 0, 1})));
}

TEST_CASE("random products factor back into their pieces") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9), deg(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> pieces;
        const int count = 1 + trial % 3;
        for (int i = 0; i < count; ++i) {
            const long d = deg(rng);
            std::vector<Rational> c;
            for (long k = 0; k < d; ++k) c.emplace_back(coef(rng));
            c.emplace_back(1);
            pieces.push_back(Polynomial(c));
        }
        const Polynomial p = product_of(pieces);
        const auto fs = irreducible_factors(p);
        CHECK(product_of(fs) == squarefree_part(p));
        for (const auto& f : fs) {
            CHECK(f.is_monic());
            if (f.degree() >= 2 && f.degree() <= 3) {
                // Degree 2 or 3: irreducible exactly when there is no rational root.
                const IntPoly ip = primitive_integer(f);
                CHECK(oracle::rational_roots(ip).empty());
            }
        }
    }
}
