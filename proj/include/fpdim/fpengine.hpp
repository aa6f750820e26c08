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

#ifndef FPDIM_FPENGINE_HPP
#define FPDIM_FPENGINE_HPP

#include <vector>

#include "fpdim/algebraic.hpp"
#include "fpdim/core.hpp"
#include "fpdim/matrix.hpp"

namespace fpdim {

struct FpOptions {
    /// Allow FPdims on data that fails the transitivity check.
    bool waive_transitivity = false;
    /// Width of the certified isolating intervals.
    Rational width = power_of_two_width(kDefaultPrecisionBits);
};

/// Column j holds the coordinates of x * (basis j).
RationalMatrix left_mult_matrix(const Element& x);

/// Left multiplication by sum_i coeffs[i] * (basis i), rational coefficients.
RationalMatrix left_mult_matrix(const FusionData& data, const std::vector<Rational>& coeffs);

/// Throws unless the data is fusion, structurally valid and transitive (or
/// transitivity is waived). Results are memoized on the data.
void require_fp_ready(const FusionData& data, const FpOptions& options);

/// Perron root of the left multiplication matrix. For elements with integer
/// coefficients the characteristic polynomial is monic over Z, so the value
/// is an algebraic integer.
AlgebraicNumber fpdim_element(const Element& x, const FpOptions& options = {});

/// FPdim of every simple, in index order.
std::vector<AlgebraicNumber> fpdim_simples(const FusionRef& data, const FpOptions& options = {});

}  // namespace fpdim

#endif
