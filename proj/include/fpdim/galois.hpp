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

#ifndef FPDIM_GALOIS_HPP
#define FPDIM_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpdim/regular.hpp"

namespace fpdim {

/// Finite group by multiplication table; the constructor checks the axioms.
class FiniteGroup {
   public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

    /// Z/n with elements labelled by `labels` (default "1", "s", "s2", ...).
    static FiniteGroup cyclic(std::size_t n, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
    std::size_t inverse(std::size_t a) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    std::size_t index_of(const std::string& label) const;
    bool is_abelian() const;
    /// Smallest subgroup containing `gens`, as sorted indices.
    std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;

   private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
};

/// Per simple: a plain trivial/nontrivial flag or a group element.
struct GaloisDatum {
    bool trivial = true;
    std::optional<std::size_t> element;
};

struct GaloisAnnotation {
    std::optional<FiniteGroup> group;
    std::vector<GaloisDatum> simples;
    /// User-supplied degree of the endomorphism field of the center.
    std::optional<Int> center_degree;

    static GaloisAnnotation all_trivial(std::size_t rank);
    bool is_all_trivial() const;
};

struct AnnotatedFusion {
    FusionRef data;
    GaloisAnnotation annotation;
};

/// Throws Invalid on size mismatch, a nontrivial unit, or a flag that
/// disagrees with its group element.
void check_annotation(const FusionData& data, const GaloisAnnotation& annotation);

/// Group-ring data on a closed subset of G: eps = 1, dual = inverse,
/// endo_degree = |G|, each simple annotated by its group element.
AnnotatedFusion from_galois_group(const FiniteGroup& group, const std::vector<std::size_t>& subset, std::string name);

/// Full subring on the Galois trivial simples. Throws Invalid when they are
/// not closed under products and duals.
FusionData galois_trivial_subring(const AnnotatedFusion& a);

/*
   Degree of the endomorphism field of the center. All-trivial annotations
   give endo_degree; abelian group annotations give endo_degree / |H| with H
   generated by the assigned elements; otherwise the user value is returned.
   Throws InsufficientData when none applies, Invalid when a user value
   contradicts the computed one.
*/
Int center_endo_degree(const AnnotatedFusion& a);

struct CenterPrediction {
    AlgebraicNumber predicted;
    AlgebraicNumber fpdim_squared;
    Int center_degree;
    bool bound_ok;
    bool equality;
    bool all_trivial;
    /// equality holds exactly when every simple is Galois trivial
    bool consistent() const { return equality == all_trivial; }
};

/// (d_Z / d) FPdim(im F) FPdim(C), compared with FPdim(C)^2.
CenterPrediction center_fpdim_prediction(const AnnotatedFusion& a, const FpOptions& options = {});

}  // namespace fpdim

#endif
