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

#ifndef FPDIM_ALGEBRAIC_HPP
#define FPDIM_ALGEBRAIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fpdim/polynomial.hpp"

namespace fpdim {

/// 2^-bits
Rational power_of_two_width(unsigned bits);

inline const unsigned kDefaultPrecisionBits = 64;

/// Closed interval with rational endpoints; lo == hi is an exact value.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& x) { return {x, x}; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator*(const Interval& o) const;
    Interval operator*(const Rational& s) const;
    /// Throws Domain when the divisor contains zero.
    Interval operator/(const Interval& o) const;
};

/// Largest possible distance between a point of `a` and a point of `b`.
Rational max_distance(const Interval& a, const Interval& b);

/// Decimal rendering of x truncated toward zero to `digits` fractional digits.
std::string to_decimal(const Rational& x, unsigned digits);

/*
   A real algebraic number: a squarefree monic polynomial together with an
   isolating interval. Either lo == hi and the value is that rational root,
   or lo < hi and the polynomial has exactly one root in the open interval
   (lo, hi) and does not vanish at either endpoint.
*/
class AlgebraicNumber {
   public:
    static AlgebraicNumber rational(const Rational& x);
    /// Verifies the isolation property (Domain error otherwise). The interval
    /// is read as (lo, hi]; a root at hi collapses to the exact point.
    AlgebraicNumber(const Polynomial& p, const Rational& lo, const Rational& hi);

    const Polynomial& defining_poly() const noexcept { return poly_; }
    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    std::optional<Rational> exact_value() const;
    Interval enclosure() const { return {lo_, hi_}; }
    Rational width() const { return hi_ - lo_; }

    /// Certified decimal approximation (digits matching the interval width).
    std::string decimal() const;

   private:
    AlgebraicNumber() = default;
    Polynomial poly_;
    Rational lo_;
    Rational hi_;

    friend AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);
};

/// Largest real root of p, refined to the given width. Rational roots come
/// back as exact points; irrational ones carry their minimal polynomial.
/// Throws Domain when p has no real root.
AlgebraicNumber isolate_max_real_root(const Polynomial& p,
                                      const Rational& width = power_of_two_width(kDefaultPrecisionBits));

/// Same root, interval width <= width. Exact values are returned unchanged.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Monic irreducible polynomial over Q vanishing at a.
Polynomial min_poly(const AlgebraicNumber& a);

/// Exact three-way comparison.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

/// s * a for a positive rational s.
AlgebraicNumber scale(const AlgebraicNumber& a, const Rational& s);

/// a * b for positive a, b. The defining polynomial is the characteristic
/// polynomial of the Kronecker product of the two companion matrices.
AlgebraicNumber product(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// 1 / a for positive a, via the reversed minimal polynomial.
AlgebraicNumber reciprocal(const AlgebraicNumber& a);

/// True when the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const AlgebraicNumber& a);

struct ConjugateEnclosure {
    std::vector<std::complex<double>> roots;
    /// Inclusion radius around each root estimate.
    std::vector<double> radii;
    /// max_i |root_i| + radius_i
    double max_modulus_bound;
};

/*
   Numerical enclosures of all complex roots of a squarefree polynomial:
   eigenvalues of the companion matrix, polished by Newton steps in long
   double, with Weierstrass-type inclusion radii
   n |p(z_i)| / |lc prod_{j != i} (z_i - z_j)|.
   Floating-point evaluation error is not bounded; callers compare with a
   tolerance.
*/
ConjugateEnclosure conjugate_enclosure(const Polynomial& p);

}  // namespace fpdim

#endif
