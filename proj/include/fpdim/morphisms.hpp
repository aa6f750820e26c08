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

#ifndef FPDIM_MORPHISMS_HPP
#define FPDIM_MORPHISMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpdim/regular.hpp"

namespace fpdim {

/*
   Additive map between based rings given by a matrix. columns[i] is the image
   of source simple i written in the target basis. An optional twist D in the
   source replaces the homomorphism law by f(x) f(y) = f(x D y).
*/
class SemiringMorphism {
   public:
    SemiringMorphism(FusionRef source, FusionRef target, std::vector<std::vector<Int>> columns,
                     std::optional<std::vector<Int>> twist = std::nullopt);

    static SemiringMorphism identity(const FusionRef& data);

    const FusionRef& source() const noexcept { return source_; }
    const FusionRef& target() const noexcept { return target_; }
    const std::vector<std::vector<Int>>& columns() const noexcept { return columns_; }
    bool is_twisted() const noexcept { return twist_.has_value(); }

    /// D, or the source unit when untwisted.
    Element twist() const;
    Element apply(const Element& x) const;

   private:
    FusionRef source_, target_;
    std::vector<std::vector<Int>> columns_;
    std::optional<std::vector<Int>> twist_;
};

struct MorphismReport {
    bool passed = true;
    std::vector<std::string> failures;

    void fail(std::string message) {
        passed = false;
        failures.push_back(std::move(message));
    }
};

/// f(x) f(y) = f(x D y) on all basis pairs, plus f(1) = 1 when untwisted.
MorphismReport check_homomorphism(const SemiringMorphism& f);

/// Every target simple appears in f(sum of all source simples).
bool check_dominant(const SemiringMorphism& f);

struct TransportReport {
    bool objects_ok = true;
    /// Only evaluated for dominant morphisms.
    bool regular_checked = false;
    bool regular_ok = true;
    /// All quantities rational and compared exactly.
    bool exact = true;
    std::vector<std::string> failures;

    bool passed() const { return objects_ok && regular_ok; }
};

/*
   FPdim(f(x)) = FPdim(D) FPdim(x) for every simple x (exact), and for dominant
   f the regular-element transport
       f(R_A) = FPdim(D) (FPdim(A) / FPdim(B)) R_B
   coordinate by coordinate (exact when rational, otherwise certified to
   comparison_tolerance()). Throws Invalid if f is not a (twisted) homomorphism.
*/
TransportReport verify_fpdim_transport(const SemiringMorphism& f, const FpOptions& options = {});

/// FPdim(D) (d_B / d_A) (FPdim(A) / FPdim(B)) FPdim(X).
AlgebraicNumber adjoint_fpdim(const AlgebraicNumber& fpdim_D, const Int& d_A, const Int& d_B,
                              const AlgebraicNumber& fpdim_A, const AlgebraicNumber& fpdim_B,
                              const AlgebraicNumber& fpdim_X);

/// FPdim(M (x)_D N) = m n / FPdim(D).
AlgebraicNumber relative_tensor_fpdim(const AlgebraicNumber& m, const AlgebraicNumber& n, const AlgebraicNumber& fpdim_D);

struct MoritaRatio {
    AlgebraicNumber ratio_a;
    AlgebraicNumber ratio_b;
    bool equal;
};

/// FPdim(C) / d for both and an exact comparison.
MoritaRatio morita_ratio_equal(const FusionRef& a, const FusionRef& b, const FpOptions& options = {});

}  // namespace fpdim

#endif
