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

#include "fpdim/algebraic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "fpdim/error.hpp"
#include "fpdim/factor.hpp"
#include "fpdim/matrix.hpp"

namespace fpdim {

Rational power_of_two_width(unsigned bits) {
    Int den = 1;
    den <<= bits;
    return Rational(Int(1), den);
}

Interval Interval::operator*(const Interval& o) const {
    const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

Interval Interval::operator*(const Rational& s) const {
    if (s >= 0) return {lo * s, hi * s};
    return {hi * s, lo * s};
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains(0)) throw Error(ErrorKind::Domain, "interval division by an interval containing zero");
    return *this * Interval{Rational(1) / o.hi, Rational(1) / o.lo};
}

Rational max_distance(const Interval& a, const Interval& b) {
    return std::max(abs(a.hi - b.lo), abs(b.hi - a.lo));
}

std::string to_decimal(const Rational& x, unsigned digits) {
    const bool neg = x < 0;
    Rational ax = abs(x);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled;
    Int num = ax.get_num() * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), ax.get_den_mpz_t());
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return (neg && scaled != 0 ? "-" : "") + s;
}

// ---------------------------------------------------------------------------

AlgebraicNumber AlgebraicNumber::rational(const Rational& x) {
    AlgebraicNumber a;
    a.poly_ = Polynomial::linear_root(x);
    a.lo_ = x;
    a.hi_ = x;
    return a;
}

AlgebraicNumber::AlgebraicNumber(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) throw Error(ErrorKind::Domain, "algebraic number needs a nonconstant polynomial");
    poly_ = squarefree_part(p);
    if (lo > hi) throw Error(ErrorKind::Domain, "isolating interval has lo > hi");
    if (lo == hi) {
        if (poly_(lo) != 0) throw Error(ErrorKind::Domain, "point interval is not a root");
        *this = rational(lo);
        return;
    }
    if (poly_(hi) == 0) {
        *this = rational(hi);
        return;
    }
    if (SturmSequence(poly_).count(lo, hi) != 1)
        throw Error(ErrorKind::Domain, "interval does not isolate exactly one root of " + poly_.to_string());
    lo_ = lo;
    hi_ = hi;
}

std::optional<Rational> AlgebraicNumber::exact_value() const {
    if (is_exact()) return lo_;
    return std::nullopt;
}

std::string AlgebraicNumber::decimal() const {
    if (is_exact()) {
        if (lo_.get_den() == 1) return lo_.get_str();
        return to_decimal(lo_, 20);
    }
    // Digits that the interval width certifies (at least one).
    const Rational w = width();
    unsigned digits = 0;
    Rational unit = 1;
    while (unit > w && digits < 40) {
        unit /= 10;
        ++digits;
    }
    if (digits > 0) --digits;
    return to_decimal(lo_, std::max(digits, 1u));
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
    if (width <= 0) throw Error(ErrorKind::Domain, "refinement width must be positive");
    if (a.is_exact() || a.width() <= width) return a;
    AlgebraicNumber out = a;
    // p(hi) != 0 by construction; lo may itself be a root outside (lo, hi).
    const int sign_hi = out.poly_.sign_at(out.hi_);
    while (out.hi_ - out.lo_ > width) {
        const Rational mid = (out.lo_ + out.hi_) / 2;
        const int s = out.poly_.sign_at(mid);
        if (s == 0) return AlgebraicNumber::rational(mid);
        if (s == sign_hi)
            out.hi_ = mid;
        else
            out.lo_ = mid;
    }
    return out;
}

AlgebraicNumber isolate_max_real_root(const Polynomial& p, const Rational& width) {
    if (p.degree() < 1) throw Error(ErrorKind::Domain, "constant polynomial has no roots");
    const Polynomial q = squarefree_part(p);
    const SturmSequence sturm(q);
    const Rational bound = root_bound(q);
    Rational lo = -bound, hi = bound;
    if (sturm.count(lo, hi) == 0) throw Error(ErrorKind::Domain, q.to_string() + " has no real root");
    // Shrink (lo, hi] until it holds only the largest root.
    while (sturm.count(lo, hi) > 1) {
        const Rational mid = (lo + hi) / 2;
        if (sturm.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    // Pick the irreducible factor owning the root; linear factors are exact.
    for (const auto& f : irreducible_factors(q)) {
        if (f.degree() == 1) {
            const Rational r = -f[0];
            if (lo < r && r <= hi) return AlgebraicNumber::rational(r);
            continue;
        }
        if (SturmSequence(f).count(lo, hi) == 1) return refine(AlgebraicNumber(f, lo, hi), width);
    }
    throw Error(ErrorKind::Domain, "root isolation lost the root of " + q.to_string());
}

Polynomial min_poly(const AlgebraicNumber& a) {
    if (a.is_exact()) return Polynomial::linear_root(a.lo());
    for (const auto& f : irreducible_factors(a.defining_poly())) {
        if (f.degree() == 1) {
            if (a.lo() < -f[0] && -f[0] < a.hi()) return f;
            continue;
        }
        if (SturmSequence(f).count(a.lo(), a.hi()) == 1) return f;
    }
    throw Error(ErrorKind::Domain, "no factor vanishes on the isolating interval");
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_exact() && b.is_exact()) return cmp(a.lo(), b.lo());
    const Polynomial pa = min_poly(a), pb = min_poly(b);
    AlgebraicNumber x = a, y = b;
    for (;;) {
        if (x.hi() <= y.lo() && !(x.is_exact() && y.is_exact())) return -1;
        if (y.hi() <= x.lo() && !(x.is_exact() && y.is_exact())) return 1;
        if (pa == pb) {
            const Rational lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
            if (SturmSequence(pa).count(lo, hi) == 1) return 0;
        }
        if (!x.is_exact()) x = refine(x, x.width() / 2);
        if (!y.is_exact()) y = refine(y, y.width() / 2);
    }
}

AlgebraicNumber scale(const AlgebraicNumber& a, const Rational& s) {
    if (s <= 0) throw Error(ErrorKind::Domain, "scale factor must be positive");
    if (a.is_exact()) return AlgebraicNumber::rational(a.lo() * s);
    // s*alpha is a root of p(t / s).
    const Polynomial q = a.defining_poly().scale_argument(Rational(1) / s).monic();
    return AlgebraicNumber(q, a.lo() * s, a.hi() * s);
}

namespace {

// Isolates the root of p inside the shrinking enclosures produced by step(k).
template <typename Step>
AlgebraicNumber isolate_in(const Polynomial& p, Step step) {
    const Polynomial q = squarefree_part(p);
    const SturmSequence sturm(q);
    for (unsigned k = 0; k < 4096; ++k) {
        const Interval j = step(k);
        if (q(j.lo) == 0 || q(j.hi) == 0) continue;
        if (sturm.count(j.lo, j.hi) != 1) continue;
        AlgebraicNumber out(q, j.lo, j.hi);
        const Polynomial mp = min_poly(out);
        if (mp.degree() == 1) return AlgebraicNumber::rational(-mp[0]);
        return AlgebraicNumber(mp, j.lo, j.hi);
    }
    throw Error(ErrorKind::Resource, "could not separate the roots of " + q.to_string());
}

AlgebraicNumber positive_part(const AlgebraicNumber& a, const char* what) {
    if (a.is_exact()) {
        if (a.lo() <= 0) throw Error(ErrorKind::Domain, std::string(what) + " needs positive operands");
        return a;
    }
    AlgebraicNumber x = a;
    while (x.lo() < 0 && x.hi() > 0) x = refine(x, x.width() / 2);
    if (x.hi() <= 0) throw Error(ErrorKind::Domain, std::string(what) + " needs positive operands");
    return x;
}

}  // namespace

AlgebraicNumber product(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber x = positive_part(a, "product"), y = positive_part(b, "product");
    if (x.is_exact()) return scale(y, x.lo());
    if (y.is_exact()) return scale(x, y.lo());
    const Polynomial p = char_poly(kronecker(companion(min_poly(x)), companion(min_poly(y))));
    return isolate_in(p, [&](unsigned k) {
        if (k > 0) {
            x = refine(x, x.width() / 2);
            y = refine(y, y.width() / 2);
        }
        return x.enclosure() * y.enclosure();
    });
}

AlgebraicNumber reciprocal(const AlgebraicNumber& a) {
    AlgebraicNumber x = positive_part(a, "reciprocal");
    if (x.is_exact()) return AlgebraicNumber::rational(Rational(1) / x.lo());
    const Polynomial mp = min_poly(x);
    std::vector<Rational> rev(mp.coeffs().rbegin(), mp.coeffs().rend());
    const Polynomial p = Polynomial(rev).monic();
    return isolate_in(p, [&](unsigned k) {
        if (k > 0 || x.lo() == 0) x = refine(x, x.width() / 2);
        if (x.lo() == 0) return Interval{Rational(0), Rational(0)};
        return Interval{Rational(1) / x.hi(), Rational(1) / x.lo()};
    });
}

bool is_algebraic_integer(const AlgebraicNumber& a) { return min_poly(a).has_integer_coeffs(); }

ConjugateEnclosure conjugate_enclosure(const Polynomial& p) {
    using cld = std::complex<long double>;
    const Polynomial m = p.monic();
    const int n = m.degree();
    ConjugateEnclosure out{{}, {}, 0.0};
    if (n < 1) return out;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -m[static_cast<std::size_t>(i)].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto ev = solver.eigenvalues()[i];
        z[static_cast<std::size_t>(i)] = cld(ev.real(), ev.imag());
    }

    std::vector<long double> coeffs(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) coeffs[static_cast<std::size_t>(i)] = static_cast<long double>(m[static_cast<std::size_t>(i)].get_d());
    auto eval = [&](cld x, cld& deriv) {
        cld v = 0, d = 0;
        for (int i = n; i >= 0; --i) {
            d = d * x + v;
            v = v * x + coeffs[static_cast<std::size_t>(i)];
        }
        deriv = d;
        return v;
    };
    for (auto& root : z)
        for (int it = 0; it < 4; ++it) {
            cld d;
            const cld v = eval(root, d);
            if (std::abs(d) == 0.0L) break;
            root -= v / d;
        }

    double bound = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        cld d;
        const long double pv = std::abs(eval(z[i], d));
        long double denom = 1.0L;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) denom *= std::abs(z[i] - z[j]);
        const long double radius = denom > 0 ? static_cast<long double>(n) * pv / denom : INFINITY;
        out.roots.emplace_back(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
        out.radii.push_back(static_cast<double>(radius));
        bound = std::max(bound, static_cast<double>(std::abs(z[i]) + radius));
    }
    out.max_modulus_bound = bound;
    return out;
}

}  // namespace fpdim
