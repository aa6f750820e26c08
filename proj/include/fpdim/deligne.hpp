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

#ifndef FPDIM_DELIGNE_HPP
#define FPDIM_DELIGNE_HPP

#include <array>
#include <string>
#include <vector>

#include "fpdim/core.hpp"

namespace fpdim {

/// Endomorphism division algebra of a simple over the reals.
enum class DivisionType { Real, Complex, Quaternion };

std::string to_string(DivisionType t);
DivisionType parse_division_type(const std::string& s);
/// Real dimension: 1, 2 or 4.
int real_dimension(DivisionType t);

/// One row of A (x)_R B: `count` distinct simples of type `type`, each
/// appearing `multiplicity` times, i.e. `count` copies of M_multiplicity(type).
struct TensorCell {
    DivisionType type;
    int multiplicity;
    int distinct_simples;

    bool operator==(const TensorCell&) const = default;
};

std::vector<TensorCell> tensor_types(DivisionType a, DivisionType b);

/// Real dimension of the semisimple algebra described by the cells.
int algebra_dimension(const std::vector<TensorCell>& cells);

struct SimpleDesc {
    std::string label;
    DivisionType type;
    /// How many times the simple occurs in the naive product object.
    int multiplicity = 1;
};

/// Object-level description of a semisimple category over a base field.
struct SemisimpleDesc {
    std::string base_field = "R";
    std::vector<SimpleDesc> simples;
};

/// Products of all simple pairs split by the tensor table. Labels are
/// "x#y", with ":1", ":2" appended when the pair splits into several simples.
SemisimpleDesc deligne_product(const SemisimpleDesc& a, const SemisimpleDesc& b);

struct IdempotentReport {
    std::array<Rational, 4> p;
    std::array<Rational, 4> q;
    bool p_idempotent;
    bool q_idempotent;
    bool orthogonal;
    bool complete;

    bool passed() const { return p_idempotent && q_idempotent && orthogonal && complete; }
};

/// C (x)_R C in the basis 1(x)1, i(x)1, 1(x)i, i(x)i:
/// p = (1(x)1 - i(x)i) / 2 and q = (1(x)1 + i(x)i) / 2.
IdempotentReport verify_cc_idempotents();

}  // namespace fpdim

#endif
