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

#include "fpdim/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "fpdim/error.hpp"

namespace fpdim {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low degree first, trimmed

// ---------------------------------------------------------------- Z/p[t]

struct Zp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }  // p < 2^31
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(ModPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    ModPoly reduce(const IntPoly& f) const {
        ModPoly out(f.size());
        Int m(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < f.size(); ++i) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
            out[i] = r.get_ui();
        }
        trim(out);
        return out;
    }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
        trim(out);
        return out;
    }

    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i])
                for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
        trim(out);
        return out;
    }

    ModPoly scale(const ModPoly& a, u64 s) const {
        ModPoly out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], s);
        trim(out);
        return out;
    }

    std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
        if (b.empty()) throw Error(ErrorKind::Domain, "modular division by zero");
        ModPoly r = a;
        if (r.size() < b.size()) return {{}, r};
        ModPoly q(r.size() - b.size() + 1, 0);
        const u64 binv = inv(b.back());
        for (std::size_t i = r.size(); i-- >= b.size();) {
            const u64 c = mul(r[i], binv);
            if (c == 0) continue;
            q[i - (b.size() - 1)] = c;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::size_t idx = i - (b.size() - 1) + j;
                r[idx] = sub(r[idx], mul(c, b[j]));
            }
        }
        trim(q);
        trim(r);
        return {q, r};
    }

    ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

    ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            ModPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    // s, t with s a + t b = 1 (a, b coprime).
    std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
        ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw Error(ErrorKind::Domain, "bezout of non-coprime polynomials");
        const u64 c = inv(r0[0]);
        return {scale(s0, c), scale(t0, c)};
    }

    ModPoly derivative(const ModPoly& a) const {
        if (a.size() <= 1) return {};
        ModPoly out(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p);
        trim(out);
        return out;
    }

    ModPoly powmod(ModPoly base, const Int& e, const ModPoly& m) const {
        ModPoly result{1};
        base = mod(base, m);
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = mod(mul(result, result), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), m);
        }
        return result;
    }
};

// Distinct-degree factorization of a monic squarefree f: (product, degree).
std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(const Zp& F, ModPoly f) {
    std::vector<std::pair<ModPoly, std::size_t>> out;
    const ModPoly x{0, 1};
    ModPoly h = x;
    const Int p(static_cast<unsigned long>(F.p));
    for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
        h = F.powmod(h, p, f);
        ModPoly g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = F.divmod(f, g).first;
            h = F.mod(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(F.monic(f), f.size() - 1);
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const Zp& F, const ModPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    const std::size_t n = g.size() - 1;
    if (n == d) {
        out.push_back(F.monic(g));
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coeff(0, F.p - 1);
    for (;;) {
        ModPoly a(n);
        for (auto& c : a) c = coeff(rng);
        Zp::trim(a);
        if (a.size() <= 1) continue;
        ModPoly b = F.powmod(a, e, g);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        Zp::trim(b);
        ModPoly h = F.gcd(g, b);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, F.divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> factor_mod(const Zp& F, const ModPoly& f) {
    std::mt19937_64 rng(0x5eed + F.p);
    std::vector<ModPoly> out;
    for (auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

// ---------------------------------------------------------- Z[t] helpers

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

IntPoly mod_coeffs(IntPoly a, const Int& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(a);
    return a;
}

IntPoly symmetric(IntPoly a, const Int& m) {
    const Int half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

IntPoly lift_to_int(const ModPoly& a) {
    IntPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
    return out;
}

Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorKind::Domain, "leading coefficient not invertible modulo p^k");
    return r;
}

// Exact quotient f / g over Z, or nothing when g does not divide f.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.size() > f.size()) return std::nullopt;
    IntPoly r = f;
    IntPoly q(f.size() - g.size() + 1, Int(0));
    for (std::size_t i = r.size(); i-- >= g.size();) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
        Int c = r[i] / g.back();
        q[i - (g.size() - 1)] = c;
        for (std::size_t j = 0; j < g.size(); ++j) r[i - (g.size() - 1) + j] -= c * g[j];
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    trim(q);
    return q;
}

IntPoly primitive(IntPoly a) {
    Int g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// ----------------------------------------------------------- Hensel lift

/*
   Lifts f = g0 * h0 (mod p), g0 monic and lc(h0) = lc(f), to a factorization
   modulo p^k. The update solving A h0 + B g0 = e (mod p) with deg A < deg g0
   keeps g monic and the leading coefficient of h fixed.
*/
std::pair<IntPoly, IntPoly> hensel_pair(const Zp& F, const IntPoly& f, const ModPoly& g0, const ModPoly& h0,
                                        unsigned k) {
    const Int p(static_cast<unsigned long>(F.p));
    auto [s, t] = F.bezout(g0, h0);
    IntPoly g = lift_to_int(g0);
    IntPoly h = lift_to_int(h0);
    h.back() = f.back();
    Int pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntPoly diff = f;
        const IntPoly gh = mul(g, h);
        diff.resize(std::max(diff.size(), gh.size()), Int(0));
        for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        trim(diff);
        for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        const ModPoly e = F.reduce(diff);
        if (!e.empty()) {
            auto [q, a] = F.divmod(F.mul(e, t), g0);
            ModPoly b = F.mul(e, s);
            const ModPoly qh = F.mul(q, h0);
            b.resize(std::max(b.size(), qh.size()), 0);
            for (std::size_t i = 0; i < qh.size(); ++i) b[i] = F.add(b[i], qh[i]);
            Zp::trim(b);
            const IntPoly ai = lift_to_int(a), bi = lift_to_int(b);
            for (std::size_t i = 0; i < ai.size(); ++i) g[i] += pj * ai[i];
            if (h.size() < bi.size()) h.resize(bi.size(), Int(0));
            for (std::size_t i = 0; i < bi.size(); ++i) h[i] += pj * bi[i];
        }
        pj *= p;
        // Keep the non-leading coefficients reduced; leading terms stay 1 and lc(f).
        Int lead_g = g.back(), lead_h = h.back();
        g = mod_coeffs(g, pj);
        h = mod_coeffs(h, pj);
        g.resize(g0.size(), Int(0));
        h.resize(h0.size(), Int(0));
        g.back() = lead_g;
        h.back() = lead_h;
    }
    return {g, h};
}

// Monic lifts modulo p^k of the modular factors of f.
void hensel_lift(const Zp& F, const IntPoly& f, const std::vector<ModPoly>& factors, unsigned k, const Int& pk,
                 std::vector<IntPoly>& out) {
    if (factors.size() == 1) {
        const Int linv = inverse_mod(f.back(), pk);
        IntPoly m = f;
        for (auto& c : m) c *= linv;
        m = mod_coeffs(m, pk);
        out.push_back(std::move(m));
        return;
    }
    const std::size_t half = factors.size() / 2;
    const std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    const std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    ModPoly g0{1}, h0;
    for (const auto& a : left) g0 = F.mul(g0, a);
    h0 = F.reduce(IntPoly{f.back()});
    for (const auto& b : right) h0 = F.mul(h0, b);
    auto [g, h] = hensel_pair(F, f, g0, h0, k);
    hensel_lift(F, g, left, k, pk, out);
    hensel_lift(F, h, right, k, pk, out);
}

std::vector<u64> small_primes() {
    std::vector<u64> primes;
    const u64 limit = 20000;
    std::vector<bool> composite(limit, false);
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        if (i > 2) primes.push_back(i);
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
    const std::size_t n = f.size() - 1;
    static const std::vector<u64> primes = small_primes();

    // Pick, among the first few good primes, the one giving the fewest factors.
    std::optional<Zp> best;
    std::vector<ModPoly> best_factors;
    int tried = 0;
    for (u64 p : primes) {
        Zp F{p};
        const ModPoly fm = F.reduce(f);
        if (fm.size() != f.size()) continue;
        if (F.gcd(fm, F.derivative(fm)).size() != 1) continue;
        auto fac = factor_mod(F, fm);
        if (!best || fac.size() < best_factors.size()) {
            best = F;
            best_factors = std::move(fac);
        }
        if (best_factors.size() == 1 || ++tried == 5) break;
    }
    if (!best) throw Error(ErrorKind::Resource, "no suitable prime found for factorization");
    if (best_factors.size() == 1) return {f};

    // Any factor g of f has |coeff| <= 2^n ||f||_2; candidates carry an extra lc(f).
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Int bound = norm;
    bound <<= static_cast<mp_bitcnt_t>(n);
    bound *= abs(f.back());
    bound *= 2;
    const Int p(static_cast<unsigned long>(best->p));
    unsigned k = 1;
    Int pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }

    std::vector<IntPoly> lifted;
    hensel_lift(*best, f, best_factors, k, pk, lifted);

    std::vector<IntPoly> found;
    IntPoly rest = f;
    std::vector<IntPoly> pool = lifted;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        bool progress = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            IntPoly cand{rest.back()};
            for (std::size_t i : idx) cand = mod_coeffs(mul(cand, pool[i]), pk);
            cand = primitive(symmetric(cand, pk));
            if (cand.size() > 1) {
                if (auto q = exact_divide(rest, cand)) {
                    found.push_back(cand);
                    rest = *q;
                    for (std::size_t i = s; i-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[i]));
                    progress = true;
                    break;
                }
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!progress) ++s;
    }
    if (rest.size() > 1) found.push_back(primitive(rest));
    return found;
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Polynomial& p) {
    if (p.degree() < 1) return {};
    IntPoly f = primitive(primitive_integer(squarefree_part(p)));
    std::vector<Polynomial> out;
    // Pull out the root 0 so the constant term is nonzero.
    if (f.front() == 0) {
        out.push_back(Polynomial::linear_root(0));
        f.erase(f.begin());
    }
    if (f.size() == 2) {
        out.push_back(to_rational(f).monic());
    } else if (f.size() > 2) {
        for (const auto& g : zassenhaus(f)) out.push_back(to_rational(g).monic());
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    });
    return out;
}

bool is_irreducible(const Polynomial& p) {
    if (p.degree() < 1) return false;
    if (squarefree_part(p).degree() != p.degree()) return false;
    return irreducible_factors(p).size() == 1;
}

}  // namespace fpdim
