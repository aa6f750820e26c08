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

#include "fpdim/matrix.hpp"

#include "fpdim/error.hpp"

namespace fpdim {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorKind::Domain, "matrix must be square");
        for (const auto& x : row) a_.push_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += x * o(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (v.size() != n_) throw Error(ErrorKind::Domain, "vector size mismatch");
    std::vector<Rational> out(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool RationalMatrix::is_nonnegative() const {
    for (const auto& x : a_)
        if (x < 0) return false;
    return true;
}

bool RationalMatrix::is_integer() const {
    for (const auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), m = b.size();
    RationalMatrix out(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
        }
    return out;
}

RationalMatrix companion(const Polynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw Error(ErrorKind::Domain, "companion matrix needs a monic nonconstant polynomial");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    RationalMatrix out(n);
    for (std::size_t i = 1; i < n; ++i) out(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = -p[i];
    return out;
}

namespace {

// Coefficients of det(tI - A), highest degree first.
std::vector<Int> berkowitz(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    std::vector<Int> prev{Int(1), Int(-a[0][0])};
    for (std::size_t r = 1; r < n; ++r) {
        // q = [1, -a_rr, -R C, -R S C, ..., -R S^(r-1) C]
        std::vector<Int> q(r + 2);
        q[0] = 1;
        q[1] = -a[r][r];
        std::vector<Int> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            Int dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * col[i];
            q[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<Int> next(r, Int(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (a[i][j] != 0) next[i] += a[i][j] * col[j];
                col = std::move(next);
            }
        }
        std::vector<Int> cur(r + 2, Int(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) cur[i] += q[i - j] * prev[j];
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace

Polynomial char_poly(const RationalMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    Int den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
    const auto high_first = berkowitz(a);
    // chi_M(t) = D^-n chi_A(D t): coefficient of t^k gets D^(k-n).
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Int dpow;
        mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n - k));
        coeffs[k] = Rational(high_first[n - k], dpow);
        coeffs[k].canonicalize();
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace fpdim
