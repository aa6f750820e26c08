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

#include "oracles.hpp"

#include <cmath>
#include <set>

namespace oracle {

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<Rational> char_poly_by_interpolation(const fpdim::RationalMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? Rational(static_cast<long>(t)) : Rational(0)) - m(i, j);
        xs.emplace_back(static_cast<long>(t));
        ys.push_back(determinant(a));
    }
    // Sum of y_i * prod_{j != i} (t - x_j) / (x_i - x_j), expanded.
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += ys[i] * basis[k] / denom;
    }
    return out;
}

long double perron_by_power_iteration(const fpdim::RationalMatrix& m, int iterations) {
    const std::size_t n = m.size();
    std::vector<long double> a(n * n), v(n, 1.0L), w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d() + (i == j ? 1.0L : 0.0L);
    long double lambda = 0;
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 0;
            for (std::size_t j = 0; j < n; ++j) w[i] += a[i * n + j] * v[j];
        }
        long double norm = 0;
        for (auto x : w) norm = std::max(norm, std::fabs(x));
        long double num = 0, den = 0;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
        }
        lambda = num / den;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    return lambda - 1.0L;
}

std::vector<Rational> rational_roots(const std::vector<fpdim::Int>& c) {
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    std::set<Rational> roots;
    if (low > 0) roots.insert(0);
    if (low + 1 >= c.size()) return {roots.begin(), roots.end()};
    auto divisors = [](fpdim::Int v) {
        v = abs(v);
        std::vector<fpdim::Int> out;
        for (fpdim::Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    for (const auto& p : divisors(c[low]))
        for (const auto& q : divisors(c.back()))
            for (int s : {-1, 1}) {
                Rational r(s * p, q);
                r.canonicalize();
                Rational acc = 0;
                for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + c[k];
                if (acc == 0) roots.insert(r);
            }
    return {roots.begin(), roots.end()};
}

fpdim::RationalMatrix left_matrix(const fpdim::FusionData& d, std::size_t x) {
    fpdim::RationalMatrix m(d.rank());
    for (std::size_t j = 0; j < d.rank(); ++j)
        for (std::size_t k = 0; k < d.rank(); ++k) m(k, j) = d.N(x, j, k);
    return m;
}

}  // namespace oracle
