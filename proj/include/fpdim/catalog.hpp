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

#ifndef FPDIM_CATALOG_HPP
#define FPDIM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpdim/deligne.hpp"
#include "fpdim/galois.hpp"

namespace fpdim {

struct FixtureEntry {
    std::string name;
    FusionRef data;
    std::optional<GaloisAnnotation> galois;
    std::optional<SemisimpleDesc> description;
    std::string provenance;

    /// The Galois annotation, defaulting to all-trivial.
    AnnotatedFusion annotated() const;
};

/// Pointed fusion data of a group (Vec_G without twist): eps = 1, d = 1.
FusionData vec_group(std::string name, const FiniteGroup& group);

/// Built-in fixture names in a fixed order.
std::vector<std::string> list_builtins();

/// Throws Schema for an unknown name.
FixtureEntry get_builtin(const std::string& name);

}  // namespace fpdim

#endif
