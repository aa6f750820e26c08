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

#include "fpdim/catalog.hpp"

#include <functional>
#include <map>

namespace fpdim {

AnnotatedFusion FixtureEntry::annotated() const {
    return {data, galois ? *galois : GaloisAnnotation::all_trivial(data->rank())};
}

FusionData vec_group(std::string name, const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::vector<Int>>> fusion(n, std::vector<std::vector<Int>>(n, std::vector<Int>(n, Int(0))));
    std::vector<std::size_t> dual(n);
    for (std::size_t a = 0; a < n; ++a) {
        dual[a] = g.inverse(a);
        for (std::size_t b = 0; b < n; ++b) fusion[a][b][g.mul(a, b)] = 1;
    }
    return FusionData(std::move(name), g.labels(), std::move(fusion), std::move(dual), std::vector<Int>(n, Int(1)), Int(1),
                      {g.identity()});
}

namespace {

using Rules = std::map<std::pair<std::string, std::string>, std::map<std::string, int>>;

// Fusion data from product rules keyed by label; products not listed are zero.
// `symmetric` fills y*x from x*y.
FusionData from_rules(std::string name, std::vector<std::string> labels, const Rules& rules, std::vector<std::size_t> dual,
                      std::vector<Int> eps, Int d, std::vector<std::size_t> unit, bool symmetric = true) {
    const std::size_t r = labels.size();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i) idx[labels[i]] = i;
    std::vector<std::vector<std::vector<Int>>> fusion(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r, Int(0))));
    for (const auto& [xy, out] : rules)
        for (const auto& [z, n] : out) {
            fusion[idx.at(xy.first)][idx.at(xy.second)][idx.at(z)] = n;
            if (symmetric) fusion[idx.at(xy.second)][idx.at(xy.first)][idx.at(z)] = n;
        }
    return FusionData(std::move(name), std::move(labels), std::move(fusion), std::move(dual), std::move(eps), std::move(d),
                      std::move(unit));
}

// Unit acts trivially on everything.
void add_unit_rules(Rules& rules, const std::vector<std::string>& labels, const std::string& unit = "1") {
    for (const auto& x : labels) rules[{unit, x}] = {{x, 1}};
}

FiniteGroup s3() {
    // Elements r^k s^e stored as index k + 3 e; s r = r^2 s.
    const std::vector<std::string> labels{"1", "r", "r2", "s", "sr", "sr2"};
    // labels sorted: "sr" = s r = r^2 s, "sr2" = s r^2 = r s.
    const std::vector<std::pair<int, int>> form{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {1, 1}};
    auto index = [&](int k, int e) {
        for (std::size_t i = 0; i < form.size(); ++i)
            if (form[i] == std::make_pair(k, e)) return i;
        return std::size_t(0);
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            const auto [k1, e1] = form[a];
            const auto [k2, e2] = form[b];
            // r^k1 s^e1 r^k2 s^e2 = r^(k1 + (-1)^e1 k2) s^(e1 + e2)
            const int k = ((k1 + (e1 ? -k2 : k2)) % 3 + 3) % 3;
            table[a][b] = index(k, (e1 + e2) % 2);
        }
    return FiniteGroup(labels, table);
}

FixtureEntry make_trivial() {
    FixtureEntry e;
    e.name = "trivial";
    e.data = share(from_rules("trivial", {"1"}, {{{"1", "1"}, {{"1", 1}}}}, {0}, {Int(1)}, Int(1), {0}));
    e.description = SemisimpleDesc{"R", {{"1", DivisionType::Real, 1}}};
    e.provenance = "Vec over the base field: one split simple, endomorphism degree 1.";
    return e;
}

FixtureEntry make_vec_c() {
    FixtureEntry e;
    e.name = "vec_c";
    e.data = share(from_rules("vec_c", {"1"}, {{{"1", "1"}, {{"1", 1}}}}, {0}, {Int(1)}, Int(2), {0}));
    e.description = SemisimpleDesc{"R", {{"1", DivisionType::Complex, 1}}};
    e.provenance = "Complex vector spaces viewed over the reals: End(1) = C, degree 2.";
    return e;
}

FixtureEntry make_vec(const std::string& name, const FiniteGroup& g, const std::string& what) {
    FixtureEntry e;
    e.name = name;
    e.data = share(vec_group(name, g));
    e.provenance = "G-graded vector spaces for G = " + what + "; associator twists do not change the fusion rules.";
    return e;
}

FixtureEntry make_rep_r_q8() {
    // Real representations of Q8: four sign characters through Q8 / {+-1} = Z/2 x Z/2,
    // and the 4-dimensional quaternion representation h with End(h) = H.
    // h (x) h complexifies to (2 W)^2 = 4 W^2 = 4 (sum of the four characters).
    const std::vector<std::string> labels{"1", "a", "b", "c", "h"};
    Rules rules;
    add_unit_rules(rules, labels);
    rules[{"a", "a"}] = {{"1", 1}};
    rules[{"b", "b"}] = {{"1", 1}};
    rules[{"c", "c"}] = {{"1", 1}};
    rules[{"a", "b"}] = {{"c", 1}};
    rules[{"a", "c"}] = {{"b", 1}};
    rules[{"b", "c"}] = {{"a", 1}};
    for (const auto& x : {"a", "b", "c"}) rules[{x, "h"}] = {{"h", 1}};
    rules[{"h", "h"}] = {{"1", 4}, {"a", 4}, {"b", 4}, {"c", 4}};
    FixtureEntry e;
    e.name = "rep_r_q8";
    e.data = share(from_rules("rep_r_q8", labels, rules, {0, 1, 2, 3, 4}, {Int(1), Int(1), Int(1), Int(1), Int(4)}, Int(1), {0}));
    e.description = SemisimpleDesc{"R",
                                   {{"1", DivisionType::Real, 1},
                                    {"a", DivisionType::Real, 1},
                                    {"b", DivisionType::Real, 1},
                                    {"c", DivisionType::Real, 1},
                                    {"h", DivisionType::Quaternion, 1}}};
    e.provenance = "Real representations of the quaternion group Q8; h is the 4-dimensional irreducible with End(h) = H.";
    return e;
}

FixtureEntry make_two_dim(const std::string& name, const std::string& x, Int d, std::string provenance) {
    const std::vector<std::string> labels{"1", x};
    Rules rules;
    add_unit_rules(rules, labels);
    rules[{x, x}] = {{"1", 2}, {x, 1}};
    FixtureEntry e;
    e.name = name;
    e.data = share(from_rules(name, labels, rules, {0, 1}, {Int(1), Int(2)}, std::move(d), {0}));
    e.provenance = std::move(provenance);
    return e;
}

FixtureEntry make_fib() {
    const std::vector<std::string> labels{"1", "x"};
    Rules rules;
    add_unit_rules(rules, labels);
    rules[{"x", "x"}] = {{"1", 1}, {"x", 1}};
    FixtureEntry e;
    e.name = "fib";
    e.data = share(from_rules("fib", labels, rules, {0, 1}, {Int(1), Int(1)}, Int(1), {0}));
    e.provenance = "Fibonacci fusion rules x^2 = 1 + x; FPdim(x) is the golden ratio.";
    return e;
}

FixtureEntry make_group_bimodules(const std::string& name, const FiniteGroup& g, const std::vector<std::size_t>& subset,
                                  std::string provenance, const std::vector<DivisionType>& types = {}) {
    AnnotatedFusion af = from_galois_group(g, subset, name);
    FixtureEntry e;
    e.name = name;
    e.data = af.data;
    e.galois = std::move(af.annotation);
    if (!types.empty()) {
        SemisimpleDesc desc;
        for (std::size_t i = 0; i < e.data->rank(); ++i) desc.simples.push_back({e.data->label(i), types[i], 1});
        e.description = std::move(desc);
    }
    e.provenance = std::move(provenance);
    return e;
}

FixtureEntry make_jj_bim() {
    FixtureEntry e = make_two_dim("jj_bim", "x", Int(3),
                                  "(J, J)-bimodules for J = Q(2^(1/3)): 1 = J and x with J (x)_Q J = J + x, End(x) = J(omega).");
    // Left and right actions of J on x differ, and no group element describes the
    // twist (J/Q is not normal). The center has endomorphism field Q.
    GaloisAnnotation ann = GaloisAnnotation::all_trivial(2);
    ann.simples[1].trivial = false;
    ann.center_degree = Int(1);
    e.galois = std::move(ann);
    return e;
}

FixtureEntry make_m2_vec() {
    const std::vector<std::string> labels{"E11", "E12", "E21", "E22"};
    Rules rules;
    const char* idx[2] = {"1", "2"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                const std::string a = std::string("E") + idx[i] + idx[j];
                const std::string b = std::string("E") + idx[j] + idx[l];
                rules[{a, b}] = {{std::string("E") + idx[i] + idx[l], 1}};
            }
    FixtureEntry e;
    e.name = "m2_vec";
    e.data = share(from_rules("m2_vec", labels, rules, {0, 2, 1, 3}, std::vector<Int>(4, Int(1)), Int(1), {0, 3},
                              /*symmetric=*/false));
    e.provenance = "2x2 matrix units E_ij E_jl = E_il: multifusion, unit E11 + E22, not transitive.";
    return e;
}

const std::vector<std::pair<std::string, std::function<FixtureEntry()>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<FixtureEntry()>>> table{
        {"trivial", make_trivial},
        {"vec_c", make_vec_c},
        {"vec_z2", [] { return make_vec("vec_z2", FiniteGroup::cyclic(2, {"1", "g"}), "Z/2"); }},
        {"vec_z3", [] { return make_vec("vec_z3", FiniteGroup::cyclic(3, {"1", "g", "g2"}), "Z/3"); }},
        {"vec_s3", [] { return make_vec("vec_s3", s3(), "S3"); }},
        {"rep_r_q8", make_rep_r_q8},
        {"rep_f2_z3",
         [] {
             return make_two_dim("rep_f2_z3", "v", Int(1),
                                 "Representations of Z/3 over F2: the 2-dimensional irreducible v has End(v) = F4 and "
                                 "v (x) v = 1 + 1 + v.");
         }},
        {"fib", make_fib},
        {"cc_bim",
         [] {
             return make_group_bimodules("cc_bim", FiniteGroup::cyclic(2, {"1", "conj"}), {0, 1},
                                         "(C, C)-bimodules over R: the trivial bimodule and the conjugating one.",
                                         {DivisionType::Complex, DivisionType::Complex});
         }},
        {"gal7",
         [] {
             return make_group_bimodules("gal7", FiniteGroup::cyclic(6), {0, 2, 4},
                                         "(L, L)-bimodules L_g over Q for L = Q(zeta_7), g in the index-2 subgroup of "
                                         "Gal(L/Q) = Z/6.");
         }},
        {"jj_bim", make_jj_bim},
        {"m2_vec", make_m2_vec},
    };
    return table;
}

}  // namespace

std::vector<std::string> list_builtins() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

FixtureEntry get_builtin(const std::string& name) {
    for (const auto& [n, make] : registry())
        if (n == name) return make();
    throw Error(ErrorKind::Schema, "unknown built-in fixture '" + name + "'");
}

}  // namespace fpdim
