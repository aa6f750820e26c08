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

#ifndef FPDIM_REGULAR_HPP
#define FPDIM_REGULAR_HPP

#include <string>
#include <vector>

#include "fpdim/fpengine.hpp"

namespace fpdim {

/// Pass threshold and refinement width for interval-certified comparisons.
Rational comparison_tolerance();   // 10^-9
Rational comparison_width();       // 10^-12

/// Real combination of simples with algebraic coefficients.
struct ExtendedElement {
    FusionRef context;
    std::vector<AlgebraicNumber> coeffs;

    bool all_rational() const;
    std::vector<Interval> enclosures(const Rational& width) const;
};

/// Fusion, structurally valid, transitive (unless waived) and eps-consistent.
void require_regular_ready(const FusionData& data, const FpOptions& options);

/// The regular element normalized with coefficient FPdim(X) / eps_X on X.
ExtendedElement regular_element(const FusionRef& data, const FpOptions& options = {});

/*
   FPdim of the category, sum_X FPdim(X)^2 / eps_X, computed as the Perron
   root of left multiplication by s = sum_X X X* / eps_X. That matrix is
   nonnegative and the regular element is a strictly positive eigenvector
   of it, so its Perron root is FPdim(s).
*/
AlgebraicNumber fpdim_category(const FusionRef& data, const FpOptions& options = {});

/// Independent route: the same sum evaluated term by term on certified intervals.
Interval fpdim_category_by_summation(const FusionRef& data, const Rational& width, const FpOptions& options = {});

struct EigenpropertyReport {
    bool passed = true;
    /// Every FPdim rational, comparison done in exact arithmetic.
    bool exact = true;
    std::vector<std::string> failures;
};

/// Checks x R = FPdim(x) R for every simple x, coordinate by coordinate.
EigenpropertyReport verify_regular_eigenproperty(const FusionRef& data, const FpOptions& options = {});

struct IntegralityCertificate {
    AlgebraicNumber fpdim;
    Polynomial min_poly;
    bool is_algebraic_integer;
};

IntegralityCertificate certify_integrality(const FusionRef& data, const FpOptions& options = {});

/// x x* = 1 exactly. Also checks that FPdim(x) = 1 agrees with the answer and
/// throws Invalid when it does not.
bool is_invertible(const FusionRef& data, std::size_t x, const FpOptions& options = {});

}  // namespace fpdim

#endif
