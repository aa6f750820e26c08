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

#ifndef FPDIM_CORE_HPP
#define FPDIM_CORE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fpdim/error.hpp"

namespace fpdim {

using Int = mpz_class;
using Rational = mpq_class;

/*
   Fusion (or multifusion) semiring data over a base field K:

     N(i, j, k)   multiplicity of simple k in the product i*j
     dual(i)      the duality involution
     eps(i)       dim over E of End(X_i), E = End(1)
     endo_degree  d = [E : K]
     unit         declared decomposition of 1 into simples

   Construction only checks shapes (sizes, index ranges, positivity of eps
   and d, nonnegative multiplicities). The semiring axioms are checked by
   the validate module so that hand-entered data can be reported on.
   Instances are immutable; share them through FusionRef.
*/
class FusionData {
   public:
    /// `fusion[i][j][k]` is N(i, j, k). `unit` lists simple indices, repeats allowed.
    FusionData(std::string name, std::vector<std::string> labels,
               const std::vector<std::vector<std::vector<Int>>>& fusion, std::vector<std::size_t> dual,
               std::vector<Int> eps, Int endo_degree, const std::vector<std::size_t>& unit);

    const std::string& name() const noexcept { return name_; }
    std::size_t rank() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    /// Throws Schema on an unknown label.
    std::size_t index_of(const std::string& label) const;
    std::optional<std::size_t> find(const std::string& label) const;

    const Int& N(std::size_t i, std::size_t j, std::size_t k) const { return fusion_[(i * rank() + j) * rank() + k]; }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    const std::vector<std::size_t>& dual_map() const noexcept { return dual_; }
    const Int& eps(std::size_t i) const { return eps_.at(i); }
    const std::vector<Int>& eps_values() const noexcept { return eps_; }
    const Int& endo_degree() const noexcept { return endo_degree_; }

    /// Declared multiplicity of each simple in 1.
    const std::vector<Int>& unit_multiplicities() const noexcept { return unit_; }
    /// Simples with nonzero declared multiplicity in 1, ascending.
    std::vector<std::size_t> unit_set() const;
    /// Exactly one unit summand.
    bool is_fusion() const;
    /// The unique unit index; throws NotFusion for multifusion data.
    std::size_t unit_index() const;

    /// Copy with a single fusion coefficient replaced.
    FusionData with_coefficient(std::size_t i, std::size_t j, std::size_t k, const Int& value) const;
    FusionData with_eps(std::vector<Int> eps) const;
    FusionData with_endo_degree(Int d) const;

    /// Structural equality: same name-independent content in the same index order.
    bool same_content(const FusionData& other) const;

    /// Memoized boolean property of this (immutable) data, e.g. "structural".
    bool memo(const std::string& key, const std::function<bool()>& compute) const;

   private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<Int> fusion_;
    std::vector<std::size_t> dual_;
    std::vector<Int> eps_;
    Int endo_degree_;
    std::vector<Int> unit_;

    struct FlagCache {
        std::mutex mutex;
        std::map<std::string, bool> flags;
    };
    std::shared_ptr<FlagCache> cache_ = std::make_shared<FlagCache>();
};

using FusionRef = std::shared_ptr<const FusionData>;

inline FusionRef share(FusionData data) { return std::make_shared<const FusionData>(std::move(data)); }

/// A finite N-linear combination of simples (a multisubset of the basis).
class Element {
   public:
    Element(FusionRef ctx, std::vector<Int> coeffs);

    static Element zero(FusionRef ctx);
    static Element basis(FusionRef ctx, std::size_t i);
    static Element basis(FusionRef ctx, const std::string& label);
    /// The declared unit 1 = sum of unit summands with their multiplicities.
    static Element unit(FusionRef ctx);
    /// Sum of all simples, each with multiplicity one.
    static Element all_simples(FusionRef ctx);

    const FusionRef& context() const noexcept { return ctx_; }
    const FusionData& data() const noexcept { return *ctx_; }
    std::size_t rank() const noexcept { return coeffs_.size(); }
    const Int& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    std::vector<std::size_t> support() const;
    bool is_zero() const;

    Element operator+(const Element& rhs) const;
    Element scaled(const Int& n) const;

    bool operator==(const Element& rhs) const;

    /// "2*1 + v" style rendering in index order.
    std::string to_string() const;

   private:
    FusionRef ctx_;
    std::vector<Int> coeffs_;
};

/// Bilinear extension of the fusion coefficients.
Element multiply(const Element& a, const Element& b);

struct Comparison {
    bool leq;
    bool geq;
    Element intersection;
};

/// Partial order a <= b (coordinatewise) and the meet a ∩ b.
Comparison compare(const Element& a, const Element& b);

Element dual_element(const Element& a);

/// Verifies that the declared unit is a sum of distinct orthogonal idempotent
/// simples acting as a two-sided identity; returns the unit index set.
/// Throws Invalid naming the first violation.
std::vector<std::size_t> unit_decomposition(const FusionData& data);

/// Every unit-decomposition violation, in a fixed order; empty when valid.
std::vector<std::string> unit_problems(const FusionData& data);

/// <a, b> = sum_i a_i b_i d eps_i, the K-dimension of Hom between the objects.
/// Fusion data only.
Rational pairing(const Element& a, const Element& b);

}  // namespace fpdim

#endif
