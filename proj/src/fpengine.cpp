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

#include "fpdim/fpengine.hpp"

#include "fpdim/validate.hpp"

namespace fpdim {

RationalMatrix left_mult_matrix(const FusionData& d, const std::vector<Rational>& coeffs) {
    const std::size_t r = d.rank();
    if (coeffs.size() != r) throw Error(ErrorKind::ContextMismatch, "coefficient vector has wrong rank");
    RationalMatrix m(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (d.N(i, j, k) != 0) m(k, j) += coeffs[i] * d.N(i, j, k);
    }
    return m;
}

RationalMatrix left_mult_matrix(const Element& x) {
    std::vector<Rational> c;
    c.reserve(x.rank());
    for (const auto& v : x.coeffs()) c.emplace_back(v);
    return left_mult_matrix(x.data(), c);
}

void require_fp_ready(const FusionData& d, const FpOptions& options) {
    if (!d.is_fusion())
        throw Error(ErrorKind::NotFusion, "Frobenius-Perron dimensions need fusion data; '" + d.name() + "' is multifusion");
    if (!d.memo("structural", [&] { return check_structural(d).passed(); }))
        throw Error(ErrorKind::Invalid, "'" + d.name() + "' fails the structural fusion-semiring checks");
    if (!options.waive_transitivity && !d.memo("transitive", [&] { return check_transitivity(d).passed(); }))
        throw Error(ErrorKind::Refused, "'" + d.name() + "' is not transitive; FPdim is not defined there (use the waiver to force)");
}

AlgebraicNumber fpdim_element(const Element& x, const FpOptions& options) {
    require_fp_ready(x.data(), options);
    if (x.is_zero()) return AlgebraicNumber::rational(0);
    return isolate_max_real_root(char_poly(left_mult_matrix(x)), options.width);
}

std::vector<AlgebraicNumber> fpdim_simples(const FusionRef& data, const FpOptions& options) {
    std::vector<AlgebraicNumber> out;
    out.reserve(data->rank());
    for (std::size_t i = 0; i < data->rank(); ++i) out.push_back(fpdim_element(Element::basis(data, i), options));
    return out;
}

}  // namespace fpdim
