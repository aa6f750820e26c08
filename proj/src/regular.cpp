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

#include "fpdim/regular.hpp"

#include "fpdim/validate.hpp"

namespace fpdim {

Rational comparison_tolerance() { return Rational(1, 1000000000); }

Rational comparison_width() {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 12);
    return Rational(Int(1), den);
}

bool ExtendedElement::all_rational() const {
    for (const auto& c : coeffs)
        if (!c.is_exact()) return false;
    return true;
}

std::vector<Interval> ExtendedElement::enclosures(const Rational& width) const {
    std::vector<Interval> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(refine(c, width).enclosure());
    return out;
}

void require_regular_ready(const FusionData& d, const FpOptions& options) {
    require_fp_ready(d, options);
    if (!d.memo("eps", [&] { return check_eps_consistency(d).passed(); }))
        throw Error(ErrorKind::Invalid, "'" + d.name() + "' fails the endo_dim consistency relations");
}

ExtendedElement regular_element(const FusionRef& data, const FpOptions& options) {
    require_regular_ready(*data, options);
    ExtendedElement out{data, {}};
    const auto dims = fpdim_simples(data, options);
    for (std::size_t i = 0; i < data->rank(); ++i)
        out.coeffs.push_back(scale(dims[i], Rational(Int(1), data->eps(i))));
    return out;
}

AlgebraicNumber fpdim_category(const FusionRef& data, const FpOptions& options) {
    require_regular_ready(*data, options);
    const FusionData& d = *data;
    const std::size_t r = d.rank();
    std::vector<Rational> s(r, Rational(0));
    for (std::size_t x = 0; x < r; ++x) {
        const Element prod = multiply(Element::basis(data, x), Element::basis(data, d.dual(x)));
        Rational w(Int(1), d.eps(x));
        for (std::size_t k = 0; k < r; ++k) s[k] += w * prod[k];
    }
    return isolate_max_real_root(char_poly(left_mult_matrix(d, s)), options.width);
}

Interval fpdim_category_by_summation(const FusionRef& data, const Rational& width, const FpOptions& options) {
    require_regular_ready(*data, options);
    Interval total = Interval::point(0);
    const auto dims = fpdim_simples(data, options);
    for (std::size_t i = 0; i < data->rank(); ++i) {
        const Interval x = refine(dims[i], width).enclosure();
        // x >= 1 > 0, so the square of the interval is [lo^2, hi^2].
        total = total + Interval{x.lo * x.lo, x.hi * x.hi} * Rational(Int(1), data->eps(i));
    }
    return total;
}

EigenpropertyReport verify_regular_eigenproperty(const FusionRef& data, const FpOptions& options) {
    const ExtendedElement reg = regular_element(data, options);
    const auto dims = fpdim_simples(data, options);
    const FusionData& d = *data;
    const std::size_t r = d.rank();
    EigenpropertyReport report;
    bool rational = reg.all_rational();
    for (const auto& x : dims) rational = rational && x.is_exact();
    report.exact = rational;

    if (rational) {
        for (std::size_t w = 0; w < r; ++w)
            for (std::size_t y = 0; y < r; ++y) {
                Rational lhs = 0;
                for (std::size_t x = 0; x < r; ++x) lhs += d.N(w, x, y) * reg.coeffs[x].lo();
                const Rational rhs = dims[w].lo() * reg.coeffs[y].lo();
                if (lhs != rhs) {
                    report.passed = false;
                    report.failures.push_back(d.label(w) + "*R has coefficient " + lhs.get_str() + " on '" + d.label(y) +
                                              "', expected " + rhs.get_str());
                }
            }
        return report;
    }

    const Rational width = comparison_width();
    const Rational tol = comparison_tolerance();
    const auto reg_iv = reg.enclosures(width);
    for (std::size_t w = 0; w < r; ++w) {
        const Interval fw = refine(dims[w], width).enclosure();
        for (std::size_t y = 0; y < r; ++y) {
            Interval lhs = Interval::point(0);
            for (std::size_t x = 0; x < r; ++x)
                if (d.N(w, x, y) != 0) lhs = lhs + reg_iv[x] * Rational(d.N(w, x, y));
            const Interval rhs = fw * reg_iv[y];
            const Rational gap = max_distance(lhs, rhs);
            if (gap > tol) {
                report.passed = false;
                report.failures.push_back(d.label(w) + "*R differs from FPdim(" + d.label(w) + ")*R on '" + d.label(y) +
                                          "' by up to " + to_decimal(gap, 12));
            }
        }
    }
    return report;
}

IntegralityCertificate certify_integrality(const FusionRef& data, const FpOptions& options) {
    AlgebraicNumber dim = fpdim_category(data, options);
    Polynomial mp = min_poly(dim);
    const bool integral = mp.has_integer_coeffs();
    return {std::move(dim), std::move(mp), integral};
}

bool is_invertible(const FusionRef& data, std::size_t x, const FpOptions& options) {
    const Element ex = Element::basis(data, x);
    const bool invertible = multiply(ex, dual_element(ex)) == Element::unit(data);
    const bool dim_one = compare(fpdim_element(ex, options), AlgebraicNumber::rational(1)) == 0;
    if (invertible != dim_one)
        throw Error(ErrorKind::Invalid, "'" + data->label(x) + "': invertibility and FPdim = 1 disagree");
    return invertible;
}

}  // namespace fpdim
