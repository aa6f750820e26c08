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

#ifndef FPDIM_FACTOR_HPP
#define FPDIM_FACTOR_HPP

#include <vector>

#include "fpdim/polynomial.hpp"

namespace fpdim {

/*
   Irreducible factorization over Q of the squarefree part of p.

   Zassenhaus: factor modulo a small prime p that keeps the polynomial
   squarefree (distinct-degree then Cantor-Zassenhaus equal-degree
   splitting), Hensel-lift the modular factors to p^k above twice the
   Mignotte bound, then recombine subsets of lifted factors by exact trial
   division. Returns monic factors sorted by degree, then coefficients.
*/
std::vector<Polynomial> irreducible_factors(const Polynomial& p);

/// True when p (nonconstant) has no nontrivial factorization over Q.
bool is_irreducible(const Polynomial& p);

}  // namespace fpdim

#endif
