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

#include "fpdim/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "fpdim/error.hpp"

namespace fpdim {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial(std::vector<Rational>{-r, Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Polynomial::has_integer_coeffs() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

int Polynomial::sign_at_infinity(bool negative) const {
    if (c_.empty()) return 0;
    int s = sgn(c_.back());
    if (negative && degree() % 2 == 1) s = -s;
    return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    auto out = c_;
    for (auto& x : out) x = -x;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    auto out = c_;
    for (auto& x : out) x *= s;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    for (int i = degree(); i >= dd; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] / d.leading();
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
    auto out = c_;
    Rational power = 1;
    for (auto& x : out) {
        x *= power;
        power *= s;
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool show_coeff = c != 1 || i == 0;
        if (show_coeff) os << c.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    const Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

IntPoly primitive_integer(const Polynomial& p) {
    if (p.is_zero()) return {};
    Int den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= content;
    return out;
}

Polynomial to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    Int g = 0;
    for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, exact over the integers.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const Int la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& v : a) v *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

int int_sign_at(const IntPoly& p, const Rational& x) {
    // v^n p(u/v) with v > 0 has the sign of p(x).
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int acc = 0;
    Int vpow = 1;
    // Horner in homogeneous form: acc = sum a_i u^i v^(n-i)
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * u + *it * vpow;
        vpow *= v;
    }
    return sgn(acc);
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.degree() < 0) throw Error(ErrorKind::Domain, "Sturm sequence of the zero polynomial");
    IntPoly a = primitive_integer(p);
    IntPoly b = primitive_integer(p.derivative());
    seq_.push_back(a);
    if (b.empty()) return;
    seq_.push_back(b);
    for (;;) {
        const IntPoly& prev = seq_[seq_.size() - 2];
        const IntPoly& cur = seq_.back();
        IntPoly r = pseudo_remainder(prev, cur);
        if (r.empty()) break;
        const std::size_t delta = prev.size() - cur.size();
        // The multiplier lc(cur)^(delta+1) may be negative; the Sturm
        // recurrence needs -rem up to a positive factor.
        const bool multiplier_negative = sgn(cur.back()) < 0 && (delta + 1) % 2 == 1;
        if (!multiplier_negative)
            for (auto& v : r) v = -v;
        make_primitive(r);
        seq_.push_back(std::move(r));
    }
}

std::size_t SturmSequence::variations_at(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
        const int v = int_sign_at(s, x);
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

std::size_t SturmSequence::variations_at_infinity(bool negative) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
        int v = sgn(s.back());
        if (negative && (s.size() - 1) % 2 == 1) v = -v;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
    const std::size_t va = variations_at(a);
    const std::size_t vb = variations_at(b);
    return va >= vb ? va - vb : 0;
}

std::size_t SturmSequence::count_real() const { return variations_at_infinity(true) - variations_at_infinity(false); }

Rational root_bound(const Polynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading());
        if (q > m) m = q;
    }
    return m + 1;
}

}  // namespace fpdim
