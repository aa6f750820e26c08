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

#ifndef FPDIM_VALIDATE_HPP
#define FPDIM_VALIDATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fpdim/core.hpp"

namespace fpdim {

struct Violation {
    std::string rule;
    std::vector<std::size_t> witness;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
    void add(std::string rule, std::vector<std::size_t> witness, std::string message) {
        violations.push_back({std::move(rule), std::move(witness), std::move(message)});
    }
    void append(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

// Rule ids used in reports.
inline constexpr const char* kRuleInvolution = "involution";
inline constexpr const char* kRuleAssociativity = "associativity";
inline constexpr const char* kRuleUnit = "unit";
inline constexpr const char* kRuleDuality = "duality";
inline constexpr const char* kRuleCyclic = "eps-cyclic";
inline constexpr const char* kRuleDualSwap = "eps-dual-swap";
inline constexpr const char* kRuleUnitDim = "eps-unit";
inline constexpr const char* kRuleTransitivity = "transitivity";

/// Associativity, unit laws, involutive duality and the duality axiom
/// (a unit summand appears in a*b exactly when b is the dual of a).
/// Total: every violation is listed.
ValidationReport check_structural(const FusionData& data);

/// Cyclic relations
///   eps_z N(x,y,z*) = eps_y N(z,x,y*) = eps_x N(y,z,x*),
///   eps_z N(x,y,z*) = eps_z N(y*,x*,z),
/// and N(a,a*,1) = eps_a, eps_1 = 1. Fusion data only (throws NotFusion).
ValidationReport check_eps_consistency(const FusionData& data);

/// Every pair of simples (x, y) admits simples u, v with y <= u*x and y <= x*v.
ValidationReport check_transitivity(const FusionData& data);

/// All elements p >= 1 with coefficients <= coeff_bound and p*p = p.
/// Throws Resource when the candidate count exceeds `max_candidates`.
std::vector<Element> search_idempotents_above_unit(const FusionRef& data, unsigned coeff_bound,
                                                   std::size_t max_candidates = 2'000'000);

struct MutationSweep {
    std::size_t total = 0;
    std::size_t detected = 0;
    /// (i, j, k, delta) of each mutation the checks did not catch.
    std::vector<std::vector<long>> undetected;

    double rate() const { return total == 0 ? 1.0 : static_cast<double>(detected) / static_cast<double>(total); }
};

/// Mutates every fusion coefficient by +1 and (when positive) by -1, one at a
/// time, and counts how many mutants fail check_structural or
/// check_eps_consistency.
MutationSweep sweep_single_entry_mutations(const FusionData& data);

}  // namespace fpdim

#endif
