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

#include "fpdim/morphisms.hpp"

namespace fpdim {

SemiringMorphism::SemiringMorphism(FusionRef source, FusionRef target, std::vector<std::vector<Int>> columns,
                                   std::optional<std::vector<Int>> twist)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)), twist_(std::move(twist)) {
    if (!source_ || !target_) throw Error(ErrorKind::Schema, "morphism needs a source and a target");
    if (columns_.size() != source_->rank())
        throw Error(ErrorKind::Schema, "morphism has " + std::to_string(columns_.size()) + " columns, source rank is " +
                                           std::to_string(source_->rank()));
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].size() != target_->rank())
            throw Error(ErrorKind::Schema, "image of '" + source_->label(i) + "' has the wrong length");
        for (const auto& v : columns_[i])
            if (v < 0) throw Error(ErrorKind::Schema, "image of '" + source_->label(i) + "' has a negative entry");
    }
    if (twist_) {
        if (twist_->size() != source_->rank()) throw Error(ErrorKind::Schema, "twist has the wrong length");
        for (const auto& v : *twist_)
            if (v < 0) throw Error(ErrorKind::Schema, "twist has a negative entry");
    }
}

SemiringMorphism SemiringMorphism::identity(const FusionRef& data) {
    std::vector<std::vector<Int>> cols(data->rank(), std::vector<Int>(data->rank(), Int(0)));
    for (std::size_t i = 0; i < data->rank(); ++i) cols[i][i] = 1;
    return SemiringMorphism(data, data, std::move(cols));
}

Element SemiringMorphism::twist() const {
    if (twist_) return Element(source_, *twist_);
    return Element::unit(source_);
}

Element SemiringMorphism::apply(const Element& x) const {
    if (x.context() != source_) throw Error(ErrorKind::ContextMismatch, "element does not belong to the morphism source");
    std::vector<Int> out(target_->rank(), Int(0));
    for (std::size_t i = 0; i < x.rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * columns_[i][k];
    }
    return Element(target_, std::move(out));
}

MorphismReport check_homomorphism(const SemiringMorphism& f) {
    MorphismReport report;
    const FusionRef& src = f.source();
    const Element d = f.twist();
    if (!f.is_twisted() && !(f.apply(Element::unit(src)) == Element::unit(f.target())))
        report.fail("f(1) = " + f.apply(Element::unit(src)).to_string() + ", expected the unit");
    for (std::size_t x = 0; x < src->rank(); ++x) {
        const Element ex = Element::basis(src, x);
        const Element xd = multiply(ex, d);
        for (std::size_t y = 0; y < src->rank(); ++y) {
            const Element ey = Element::basis(src, y);
            const Element lhs = multiply(f.apply(ex), f.apply(ey));
            const Element rhs = f.apply(multiply(xd, ey));
            if (!(lhs == rhs))
                report.fail("(" + src->label(x) + ", " + src->label(y) + "): f(x)f(y) = " + lhs.to_string() +
                            " but f(xDy) = " + rhs.to_string());
        }
    }
    return report;
}

bool check_dominant(const SemiringMorphism& f) {
    const Element image = f.apply(Element::all_simples(f.source()));
    for (const auto& c : image.coeffs())
        if (c == 0) return false;
    return true;
}

namespace {

Interval enclose(const AlgebraicNumber& a, const Rational& width) { return refine(a, width).enclosure(); }

}  // namespace

TransportReport verify_fpdim_transport(const SemiringMorphism& f, const FpOptions& options) {
    const MorphismReport hom = check_homomorphism(f);
    if (!hom.passed) throw Error(ErrorKind::Invalid, "not a homomorphism: " + hom.failures.front());
    const FusionRef& src = f.source();
    const FusionRef& tgt = f.target();
    TransportReport report;

    const AlgebraicNumber dim_d = fpdim_element(f.twist(), options);
    const auto src_dims = fpdim_simples(src, options);
    for (std::size_t x = 0; x < src->rank(); ++x) {
        const AlgebraicNumber lhs = fpdim_element(f.apply(Element::basis(src, x)), options);
        const AlgebraicNumber rhs = product(dim_d, src_dims[x]);
        if (compare(lhs, rhs) != 0) {
            report.objects_ok = false;
            report.failures.push_back("FPdim(f(" + src->label(x) + ")) = " + lhs.decimal() + " but FPdim(D) FPdim(" +
                                      src->label(x) + ") = " + rhs.decimal());
        }
    }

    if (!check_dominant(f)) return report;
    report.regular_checked = true;
    const ExtendedElement reg_a = regular_element(src, options);
    const ExtendedElement reg_b = regular_element(tgt, options);
    const AlgebraicNumber ratio = product(fpdim_category(src, options), reciprocal(fpdim_category(tgt, options)));
    const AlgebraicNumber factor = product(dim_d, ratio);

    const Rational width = comparison_width();
    report.exact = factor.is_exact() && reg_a.all_rational() && reg_b.all_rational();
    const Rational tol = report.exact ? Rational(0) : comparison_tolerance();
    const Interval fac = enclose(factor, width);
    const auto ra = reg_a.enclosures(width);
    const auto rb = reg_b.enclosures(width);
    for (std::size_t b = 0; b < tgt->rank(); ++b) {
        Interval lhs = Interval::point(0);
        for (std::size_t x = 0; x < src->rank(); ++x)
            if (f.columns()[x][b] != 0) lhs = lhs + ra[x] * Rational(f.columns()[x][b]);
        const Interval rhs = fac * rb[b];
        const Rational gap = max_distance(lhs, rhs);
        if (gap > tol) {
            report.regular_ok = false;
            report.failures.push_back("f(R_A) differs from the scaled R_B on '" + tgt->label(b) + "' by up to " +
                                      to_decimal(gap, 12));
        }
    }
    return report;
}

namespace {

void require_positive(const AlgebraicNumber& a, const char* name) {
    if (compare(a, AlgebraicNumber::rational(0)) <= 0)
        throw Error(ErrorKind::Domain, std::string(name) + " must be positive");
}

}  // namespace

AlgebraicNumber adjoint_fpdim(const AlgebraicNumber& fpdim_D, const Int& d_A, const Int& d_B, const AlgebraicNumber& fpdim_A,
                              const AlgebraicNumber& fpdim_B, const AlgebraicNumber& fpdim_X) {
    require_positive(fpdim_D, "FPdim(D)");
    require_positive(fpdim_A, "FPdim(A)");
    require_positive(fpdim_B, "FPdim(B)");
    require_positive(fpdim_X, "FPdim(X)");
    if (d_A <= 0 || d_B <= 0) throw Error(ErrorKind::Domain, "endomorphism degrees must be positive");
    const AlgebraicNumber ratio = product(fpdim_A, reciprocal(fpdim_B));
    Rational degrees(d_B, d_A);
    degrees.canonicalize();
    return scale(product(product(fpdim_D, ratio), fpdim_X), degrees);
}

AlgebraicNumber relative_tensor_fpdim(const AlgebraicNumber& m, const AlgebraicNumber& n, const AlgebraicNumber& fpdim_D) {
    require_positive(fpdim_D, "FPdim(D)");
    require_positive(m, "FPdim(M)");
    require_positive(n, "FPdim(N)");
    return product(product(m, n), reciprocal(fpdim_D));
}

MoritaRatio morita_ratio_equal(const FusionRef& a, const FusionRef& b, const FpOptions& options) {
    AlgebraicNumber ra = scale(fpdim_category(a, options), Rational(Int(1), a->endo_degree()));
    AlgebraicNumber rb = scale(fpdim_category(b, options), Rational(Int(1), b->endo_degree()));
    const bool equal = compare(ra, rb) == 0;
    return {std::move(ra), std::move(rb), equal};
}

}  // namespace fpdim
