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

// Acceptance report: one PASS/FAIL line per numbered criterion. Exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "fpdim/io.hpp"
#include "fpdim/validate.hpp"
#include "oracles.hpp"

using namespace fpdim;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

Polynomial ints(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

bool is_exactly(const AlgebraicNumber& a, const Rational& r) { return a.is_exact() && a.lo() == r; }

Rational pow10_inv(unsigned k) {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return Rational(Int(1), den);
}

Outcome criterion1() {
    Outcome o;
    const auto q8 = get_builtin("rep_r_q8").data;
    const AlgebraicNumber dim = fpdim_category(q8);
    o.require(is_exactly(dim, 8), "FPdim(Rep_R(Q8)) = 8");
    o.require(min_poly(dim) == ints({-8, 1}), "min poly t - 8");
    const auto dims = fpdim_simples(q8);
    const long expect[5] = {1, 1, 1, 1, 4};
    for (std::size_t i = 0; i < 5; ++i) o.require(is_exactly(dims[i], expect[i]), "FPdim(" + q8->label(i) + ")");
    o.note("FPdim = " + dim.decimal() + ", simples (1,1,1,1,4)");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto f2 = get_builtin("rep_f2_z3").data;
    o.require(is_exactly(fpdim_category(f2), 3), "FPdim(C) = 3");
    const Element v = Element::basis(f2, "v");
    o.require(is_exactly(fpdim_element(v), 2), "FPdim(V) = 2");
    o.require(char_poly(left_mult_matrix(v)) == ints({-2, -1, 1}), "char poly t^2 - t - 2");
    o.require(Polynomial(oracle::char_poly_by_interpolation(left_mult_matrix(v))) == ints({-2, -1, 1}), "char poly oracle");
    const IntegralityCertificate c = certify_integrality(f2);
    o.require(c.min_poly == ints({-3, 1}) && c.min_poly.has_integer_coeffs() && c.is_algebraic_integer, "certificate t - 3");
    o.note("chi(L_V) = " + char_poly(left_mult_matrix(v)).to_string() + ", certificate " + c.min_poly.to_string());
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto cc = get_builtin("cc_bim").data;
    o.require(is_exactly(fpdim_category(cc), 2), "FPdim = 2");
    o.require(cc->endo_degree() == 2, "d = 2");
    const MoritaRatio r = morita_ratio_equal(get_builtin("trivial").data, cc);
    o.require(r.equal && is_exactly(r.ratio_a, 1) && is_exactly(r.ratio_b, 1), "Morita ratio 1 = 1");
    o.note("ratios " + r.ratio_a.decimal() + " = " + r.ratio_b.decimal());
    return o;
}

Outcome criterion4() {
    Outcome o;
    const CenterPrediction p = center_fpdim_prediction(get_builtin("gal7").annotated());
    o.require(p.center_degree == 2, "d_Z = 2");
    o.require(is_exactly(p.predicted, 1), "prediction = 1");
    o.require(is_exactly(p.fpdim_squared, 9), "FPdim^2 = 9");
    o.require(p.bound_ok && compare(p.predicted, p.fpdim_squared) < 0, "strict 1 < 9");
    o.require(!p.equality, "equality flag false");
    o.note("(" + p.center_degree.get_str() + "/6) * 1 * 3 = " + p.predicted.decimal() + " < " + p.fpdim_squared.decimal());
    return o;
}

Outcome criterion5() {
    Outcome o;
    const AlgebraicNumber r = relative_tensor_fpdim(AlgebraicNumber::rational(6), AlgebraicNumber::rational(6),
                                                    AlgebraicNumber::rational(3));
    o.require(is_exactly(r, 12), "6 * 6 / 3 = 12");
    o.note("value " + r.decimal());
    return o;
}

Outcome criterion6() {
    Outcome o;
    using D = DivisionType;
    const D all[3] = {D::Real, D::Complex, D::Quaternion};
    int pairs = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            ++pairs;
            const auto cells = tensor_types(all[i], all[j]);
            o.require(cells == tensor_types(all[j], all[i]), "symmetry " + to_string(all[i]) + to_string(all[j]));
            o.require(algebra_dimension(cells) == real_dimension(all[i]) * real_dimension(all[j]),
                      "dimension count " + to_string(all[i]) + to_string(all[j]));
        }
    o.require(tensor_types(D::Complex, D::Complex) == std::vector<TensorCell>{{D::Complex, 1, 2}}, "(C,C) two C simples");
    o.require(tensor_types(D::Quaternion, D::Quaternion) == std::vector<TensorCell>{{D::Real, 4, 1}}, "(H,H) one R, mult 4");
    o.require(tensor_types(D::Complex, D::Quaternion) == std::vector<TensorCell>{{D::Complex, 2, 1}}, "(C,H) one C, mult 2");
    for (D t : all) o.require(tensor_types(D::Real, t) == std::vector<TensorCell>{{t, 1, 1}}, "(R," + to_string(t) + ")");
    const IdempotentReport r = verify_cc_idempotents();
    o.require(r.p_idempotent, "p^2 = p");
    o.require(r.q_idempotent, "q^2 = q");
    o.require(r.orthogonal, "pq = 0");
    o.require(r.complete, "p + q = 1");
    o.note(std::to_string(pairs) + " unordered pairs, idempotents exact");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto fib = get_builtin("fib").data;
    const AlgebraicNumber phi = refine(fpdim_element(Element::basis(fib, "x")), pow10_inv(12));
    Rational c(Int("1618033988749894"), Int("1000000000000000"));
    c.canonicalize();
    o.require(phi.lo() >= c - pow10_inv(12) && phi.hi() <= c + pow10_inv(12), "FPdim(x) within 1e-12 of 1.618033988749894");
    o.require(min_poly(phi) == ints({-1, -1, 1}), "min poly t^2 - t - 1");
    const IntegralityCertificate cert = certify_integrality(fib);
    o.require(cert.min_poly == ints({5, -5, 1}), "FPdim(C) min poly t^2 - 5t + 5");
    o.require(cert.is_algebraic_integer, "integrality flag");
    o.note("FPdim(x) in [" + to_decimal(phi.lo(), 15) + ", " + to_decimal(phi.hi(), 15) + "], FPdim(C) root of " +
           cert.min_poly.to_string());
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Rational tol = comparison_tolerance();
    std::size_t fixtures = 0, sweep_total = 0, sweep_detected = 0;
    std::vector<std::string> skipped, missed;
    for (const auto& name : list_builtins()) {
        const FixtureEntry e = get_builtin(name);
        const FusionRef d = e.data;
        if (!d->is_fusion()) {
            // Every property below is stated for fusion data only.
            skipped.push_back(name);
            continue;
        }
        ++fixtures;
        o.require(check_eps_consistency(*d).passed(), name + ": eps relations");
        for (std::size_t a = 0; a < d->rank(); ++a)
            o.require(d->N(a, d->dual(a), d->unit_index()) == d->eps(a), name + ": N(a, a*, 1) = eps_a");

        const EigenpropertyReport eig = verify_regular_eigenproperty(d);
        o.require(eig.passed, name + ": regular eigen-property");

        const auto dims = fpdim_simples(d);
        for (std::size_t x = 0; x < d->rank(); ++x) {
            o.require(compare(dims[x], dims[d->dual(x)]) == 0, name + ": FPdim(x) = FPdim(x*)");
            o.require(compare(dims[x], AlgebraicNumber::rational(1)) >= 0, name + ": FPdim(x) >= 1");
            const ConjugateEnclosure conj = conjugate_enclosure(squarefree_part(char_poly(left_mult_matrix(Element::basis(d, x)))));
            o.require(conj.max_modulus_bound <= Rational(dims[x].hi() + tol).get_d(), name + ": conjugate moduli");
            const Interval fx = refine(dims[x], comparison_width()).enclosure();
            for (std::size_t y = 0; y < d->rank(); ++y) {
                const Interval fy = refine(dims[y], comparison_width()).enclosure();
                const Element xy = multiply(Element::basis(d, x), Element::basis(d, y));
                const Interval fxy = refine(fpdim_element(xy), comparison_width()).enclosure();
                o.require(max_distance(fxy, fx * fy) <= tol, name + ": FPdim multiplicative");
            }
        }

        if (d->rank() <= 3) {
            const auto found = search_idempotents_above_unit(d, 4);
            o.require(found.size() == 1 && found[0] == Element::unit(d), name + ": idempotents up to 4");
        }
        if (d->rank() == 2) {
            const MutationSweep s = sweep_single_entry_mutations(*d);
            sweep_total += s.total;
            sweep_detected += s.detected;
            for (const auto& m : s.undetected) {
                std::ostringstream os;
                os << name << " N[" << d->label(static_cast<std::size_t>(m[0])) << "][" << d->label(static_cast<std::size_t>(m[1]))
                   << "][" << d->label(static_cast<std::size_t>(m[2])) << "]" << (m[3] > 0 ? "+1" : "-1");
                missed.push_back(os.str());
            }
        }
    }
    const double rate = sweep_total == 0 ? 1.0 : static_cast<double>(sweep_detected) / static_cast<double>(sweep_total);
    std::ostringstream summary;
    summary.setf(std::ios::fixed);
    summary.precision(1);
    summary << fixtures << " fusion fixtures; mutation sweep " << sweep_detected << "/" << sweep_total << " = " << 100.0 * rate
            << "% detected (needs 95%)";
    o.note(summary.str());
    o.require(rate >= 0.95, "mutation detection >= 95%");
    if (!missed.empty()) {
        std::string s = "undetected mutants (still valid fusion data):";
        for (const auto& m : missed) s += " " + m;
        o.note(s);
    }
    if (!skipped.empty()) {
        std::string s = "multifusion, skipped:";
        for (const auto& m : skipped) s += " " + m;
        o.note(s);
    }
    return o;
}

std::string run(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("cannot run " + cmd);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int rc = pclose(p);
    out += "[exit " + std::to_string(WEXITSTATUS(rc)) + "]\n";
    return out;
}

std::string pipeline(const std::filesystem::path& dir) {
    const std::string cli = FPDIM_CLI_PATH;
    std::string all;
    std::filesystem::create_directories(dir);
    for (const auto& name : list_builtins()) {
        const std::string file = (dir / (name + ".json")).string();
        all += run("\"" + cli + "\" catalog emit " + name + " > \"" + file + "\"");
        all += run("\"" + cli + "\" validate \"" + file + "\" 2>&1");
        all += run("\"" + cli + "\" fpdim \"" + file + "\" 2>&1");
        all += run("\"" + cli + "\" fpdim \"" + file + "\" --category 2>&1");
        all += run("\"" + cli + "\" regular \"" + file + "\" 2>&1");
        all += run("\"" + cli + "\" integrality \"" + file + "\" 2>&1");
        all += run("\"" + cli + "\" center \"" + file + "\" 2>&1");
        all += run("\"" + cli + "\" --format text morita \"" + file + "\" \"" + (dir / "trivial.json").string() + "\" 2>&1");
        std::ifstream in(file);
        all += std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    all += run("\"" + cli + "\" deligne \"" + (dir / "rep_r_q8.json").string() + "\" \"" + (dir / "vec_c.json").string() + "\"");
    return all;
}

Outcome criterion9() {
    Outcome o;
    const auto base = std::filesystem::temp_directory_path() / ("fpdim_acceptance_" + std::to_string(getpid()));
    const std::string a = pipeline(base / "run1");
    const std::string b = pipeline(base / "run2");
    std::filesystem::remove_all(base);
    o.require(!a.empty() && a == b, "two pipeline runs byte-identical");
    o.require(a.find("\"value\": \"8\"") != std::string::npos, "pipeline reports FPdim 8 for rep_r_q8");
    o.note(std::to_string(a.size()) + " bytes compared");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL");
        for (std::size_t i = 0; i < o.notes.size(); ++i) std::cout << (i == 0 ? " (" : "; ") << o.notes[i];
        std::cout << (o.notes.empty() ? "" : ")") << "\n";
        if (!o.pass) ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed in " << secs << " s\n";
    return failed == 0 ? 0 : 1;
}
