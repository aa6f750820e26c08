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

#include "fpdim/validate.hpp"

namespace fpdim {

namespace {

std::string lbl(const FusionData& d, std::size_t i) { return "'" + d.label(i) + "'"; }

}  // namespace

ValidationReport check_structural(const FusionData& d) {
    ValidationReport report;
    const std::size_t r = d.rank();

    for (std::size_t i = 0; i < r; ++i)
        if (d.dual(d.dual(i)) != i)
            report.add(kRuleInvolution, {i},
                       "dual is not an involution at " + lbl(d, i) + ": dual(dual(" + d.label(i) + ")) = " +
                           d.label(d.dual(d.dual(i))));

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    Int left = 0, right = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        if (d.N(i, j, m) != 0 && d.N(m, k, l) != 0) left += d.N(i, j, m) * d.N(m, k, l);
                        if (d.N(j, k, m) != 0 && d.N(i, m, l) != 0) right += d.N(j, k, m) * d.N(i, m, l);
                    }
                    if (left != right)
                        report.add(kRuleAssociativity, {i, j, k, l},
                                   "(" + d.label(i) + "*" + d.label(j) + ")*" + d.label(k) + " has " + left.get_str() +
                                       " copies of " + lbl(d, l) + " but " + d.label(i) + "*(" + d.label(j) + "*" +
                                       d.label(k) + ") has " + right.get_str());
                }

    for (auto& msg : unit_problems(d)) report.add(kRuleUnit, {}, msg);

    const auto units = d.unit_set();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            std::size_t unit_summands = 0;
            for (std::size_t u : units)
                if (d.N(a, b, u) != 0) ++unit_summands;
            const bool has_one = unit_summands == 1;
            const bool is_dual = d.dual(a) == b;
            if (has_one && !is_dual)
                report.add(kRuleDuality, {a, b},
                           d.label(a) + "*" + d.label(b) + " contains a unit summand but " + lbl(d, b) +
                               " is not the dual of " + lbl(d, a));
            else if (!has_one && is_dual)
                report.add(kRuleDuality, {a, b},
                           d.label(a) + "*" + d.label(b) + " contains " + std::to_string(unit_summands) +
                               " unit summands; exactly one expected since " + lbl(d, b) + " is dual to " + lbl(d, a));
        }
    return report;
}

ValidationReport check_eps_consistency(const FusionData& d) {
    const std::size_t unit = d.unit_index();
    ValidationReport report;
    const std::size_t r = d.rank();

    if (d.eps(unit) != 1) report.add(kRuleUnitDim, {unit}, "the unit must have endo_dim 1, got " + d.eps(unit).get_str());

    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t z = 0; z < r; ++z) {
                const Int a = d.eps(z) * d.N(x, y, d.dual(z));
                const Int b = d.eps(y) * d.N(z, x, d.dual(y));
                const Int c = d.eps(x) * d.N(y, z, d.dual(x));
                const Int s = d.eps(z) * d.N(d.dual(y), d.dual(x), z);
                const std::string triple = "(" + d.label(x) + ", " + d.label(y) + ", " + d.label(z) + ")";
                if (a != b || a != c)
                    report.add(kRuleCyclic, {x, y, z},
                               "cyclic relation fails at " + triple + ": " + a.get_str() + ", " + b.get_str() + ", " +
                                   c.get_str());
                if (a != s)
                    report.add(kRuleDualSwap, {x, y, z},
                               "dual-swap relation fails at " + triple + ": " + a.get_str() + " vs " + s.get_str());
            }

    for (std::size_t a = 0; a < r; ++a)
        if (d.N(a, d.dual(a), unit) != d.eps(a))
            report.add(kRuleUnitDim, {a},
                       "N(" + d.label(a) + ", " + d.label(d.dual(a)) + ", " + d.label(unit) + ") = " +
                           d.N(a, d.dual(a), unit).get_str() + " but endo_dim is " + d.eps(a).get_str());
    return report;
}

ValidationReport check_transitivity(const FusionData& d) {
    ValidationReport report;
    const std::size_t r = d.rank();
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            bool left = false, right = false;
            for (std::size_t u = 0; u < r && !left; ++u) left = d.N(u, x, y) != 0;
            for (std::size_t v = 0; v < r && !right; ++v) right = d.N(x, v, y) != 0;
            if (!left)
                report.add(kRuleTransitivity, {x, y}, "no simple u with " + d.label(y) + " <= u*" + d.label(x));
            if (!right)
                report.add(kRuleTransitivity, {x, y}, "no simple v with " + d.label(y) + " <= " + d.label(x) + "*v");
        }
    return report;
}

std::vector<Element> search_idempotents_above_unit(const FusionRef& data, unsigned coeff_bound,
                                                   std::size_t max_candidates) {
    const std::size_t r = data->rank();
    const auto& lower = data->unit_multiplicities();
    std::vector<unsigned long> lo(r);
    double count = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (lower[i] > coeff_bound) return {};
        lo[i] = lower[i].get_ui();
        count *= static_cast<double>(coeff_bound - lo[i] + 1);
    }
    if (count > static_cast<double>(max_candidates))
        throw Error(ErrorKind::Resource, "idempotent search over " + std::to_string(static_cast<long long>(count)) +
                                             " candidates exceeds the cutoff of " + std::to_string(max_candidates));

    std::vector<Element> found;
    std::vector<unsigned long> digits = lo;
    for (;;) {
        std::vector<Int> c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = digits[i];
        Element p(data, std::move(c));
        if (multiply(p, p) == p) found.push_back(p);

        std::size_t pos = 0;
        while (pos < r && digits[pos] == coeff_bound) {
            digits[pos] = lo[pos];
            ++pos;
        }
        if (pos == r) break;
        ++digits[pos];
    }
    return found;
}

MutationSweep sweep_single_entry_mutations(const FusionData& d) {
    MutationSweep sweep;
    const std::size_t r = d.rank();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (long delta : {1L, -1L}) {
                    if (delta < 0 && d.N(i, j, k) == 0) continue;
                    const FusionData mutant = d.with_coefficient(i, j, k, d.N(i, j, k) + delta);
                    bool caught = !check_structural(mutant).passed();
                    if (!caught && mutant.is_fusion()) caught = !check_eps_consistency(mutant).passed();
                    ++sweep.total;
                    if (caught)
                        ++sweep.detected;
                    else
                        sweep.undetected.push_back({static_cast<long>(i), static_cast<long>(j), static_cast<long>(k), delta});
                }
    return sweep;
}

}  // namespace fpdim
