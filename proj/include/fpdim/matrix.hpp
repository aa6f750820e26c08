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

#ifndef FPDIM_MATRIX_HPP
#define FPDIM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fpdim/polynomial.hpp"

namespace fpdim {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_nonnegative() const;
    bool is_integer() const;

   private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

/// Kronecker product; its spectrum is the set of pairwise eigenvalue products.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated low coefficients in the last column.
RationalMatrix companion(const Polynomial& monic);

/*
   Characteristic polynomial det(t I - M), monic of degree n.

   The matrix is scaled by the lcm D of its denominators and the integer
   matrix is handled by Berkowitz's division-free recurrence, so no rational
   fractions appear during the elimination. The result is mapped back via
   chi_M(t) = D^-n chi_{DM}(D t).
*/
Polynomial char_poly(const RationalMatrix& m);

}  // namespace fpdim

#endif
