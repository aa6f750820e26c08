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

#ifndef FPDIM_POLYNOMIAL_HPP
#define FPDIM_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fpdim {

using Int = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with exact rational coefficients, stored low degree
/// first with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    /// t - r
    static Polynomial linear_root(const Rational& r);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const;
    /// Sign of p(x) as x -> +inf (or -inf when `negative`).
    int sign_at_infinity(bool negative) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// p(s * t)
    Polynomial scale_argument(const Rational& s) const;

    /// "t^2 - t - 1"
    std::string to_string(const std::string& var = "t") const;

   private:
    std::vector<Rational> c_;
    void trim();
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Integer polynomial, low degree first, no trailing zeros.
using IntPoly = std::vector<Int>;

/// Positive rational multiple of p with coprime integer coefficients.
IntPoly primitive_integer(const Polynomial& p);
Polynomial to_rational(const IntPoly& p);

/*
   Sturm sequence of a squarefree polynomial. The remainders are kept as
   primitive integer polynomials rescaled by positive factors only, which
   preserves every sign change count.
*/
class SturmSequence {
   public:
    explicit SturmSequence(const Polynomial& p);
    /// Number of distinct real roots in the half-open interval (a, b], a < b.
    std::size_t count(const Rational& a, const Rational& b) const;
    std::size_t count_real() const;

   private:
    std::vector<IntPoly> seq_;
    std::size_t variations_at(const Rational& x) const;
    std::size_t variations_at_infinity(bool negative) const;
};

/// Cauchy bound: every complex root has modulus < bound.
Rational root_bound(const Polynomial& p);

}  // namespace fpdim

#endif
