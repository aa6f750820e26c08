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

#ifndef FPDIM_ERROR_HPP
#define FPDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fpdim {

enum class ErrorKind {
    ContextMismatch,  // elements from different fusion data
    NotFusion,        // operation needs a simple unit
    Invalid,          // data violates an axiom the operation relies on
    Refused,          // non-transitive data without waiver
    Domain,           // bad numeric input (no real root, nonpositive value, ...)
    Resource,         // search space above the configured cutoff
    Schema,           // malformed input document
    InsufficientData  // annotation lacks what the computation needs
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace fpdim

#endif
