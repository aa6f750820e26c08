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

#include "fpdim/deligne.hpp"

#include <set>
#include <utility>

namespace fpdim {

std::string to_string(DivisionType t) {
    switch (t) {
        case DivisionType::Real: return "R";
        case DivisionType::Complex: return "C";
        case DivisionType::Quaternion: return "H";
    }
    return "?";
}

DivisionType parse_division_type(const std::string& s) {
    if (s == "R" || s == "real") return DivisionType::Real;
    if (s == "C" || s == "complex") return DivisionType::Complex;
    if (s == "H" || s == "quaternion") return DivisionType::Quaternion;
    throw Error(ErrorKind::Schema, "unknown division type '" + s + "' (expected R, C or H)");
}

int real_dimension(DivisionType t) {
    switch (t) {
        case DivisionType::Real: return 1;
        case DivisionType::Complex: return 2;
        case DivisionType::Quaternion: return 4;
    }
    return 0;
}

std::vector<TensorCell> tensor_types(DivisionType a, DivisionType b) {
    using D = DivisionType;
    if (a == D::Real) return {{b, 1, 1}};
    if (b == D::Real) return {{a, 1, 1}};
    if (a == D::Complex && b == D::Complex) return {{D::Complex, 1, 2}};   // C x C
    if (a == D::Quaternion && b == D::Quaternion) return {{D::Real, 4, 1}};  // M_4(R)
    return {{D::Complex, 2, 1}};                                           // M_2(C)
}

int algebra_dimension(const std::vector<TensorCell>& cells) {
    int total = 0;
    for (const auto& c : cells) total += c.multiplicity * c.multiplicity * real_dimension(c.type) * c.distinct_simples;
    return total;
}

namespace {

void require_real(const SemisimpleDesc& d) {
    if (d.base_field != "R")
        throw Error(ErrorKind::Domain, "division-type decomposition is only available over the reals, got base field '" +
                                           d.base_field + "'");
    std::set<std::string> seen;
    for (const auto& s : d.simples)
        if (!seen.insert(s.label).second) throw Error(ErrorKind::Schema, "duplicate simple label '" + s.label + "'");
}

}  // namespace

SemisimpleDesc deligne_product(const SemisimpleDesc& a, const SemisimpleDesc& b) {
    require_real(a);
    require_real(b);
    SemisimpleDesc out;
    for (const auto& x : a.simples)
        for (const auto& y : b.simples) {
            const std::string base = x.label + "#" + y.label;
            for (const auto& cell : tensor_types(x.type, y.type)) {
                for (int k = 0; k < cell.distinct_simples; ++k) {
                    std::string label = cell.distinct_simples == 1 ? base : base + ":" + std::to_string(k + 1);
                    out.simples.push_back({std::move(label), cell.type, cell.multiplicity * x.multiplicity * y.multiplicity});
                }
            }
        }
    return out;
}

namespace {

using Vec4 = std::array<Rational, 4>;

// Basis index u + 2 v stands for i^u (x) i^v.
Vec4 mul(const Vec4& a, const Vec4& b) {
    Vec4 out{};
    for (int x = 0; x < 4; ++x) {
        if (a[x] == 0) continue;
        for (int y = 0; y < 4; ++y) {
            if (b[y] == 0) continue;
            const int u1 = x & 1, v1 = x >> 1, u2 = y & 1, v2 = y >> 1;
            const int sign = ((u1 & u2) ? -1 : 1) * ((v1 & v2) ? -1 : 1);
            out[(u1 ^ u2) | ((v1 ^ v2) << 1)] += sign * a[x] * b[y];
        }
    }
    return out;
}

}  // namespace

IdempotentReport verify_cc_idempotents() {
    const Rational half(1, 2);
    const Vec4 one{Rational(1), Rational(0), Rational(0), Rational(0)};
    const Vec4 p{half, Rational(0), Rational(0), -half};
    const Vec4 q{half, Rational(0), Rational(0), half};
    const Vec4 zero{};
    Vec4 sum;
    for (int k = 0; k < 4; ++k) sum[k] = p[k] + q[k];
    return {p, q, mul(p, p) == p, mul(q, q) == q, mul(p, q) == zero && mul(q, p) == zero, sum == one};
}

}  // namespace fpdim
