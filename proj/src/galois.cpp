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

#include "fpdim/galois.hpp"

#include <algorithm>
#include <set>

namespace fpdim {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorKind::Schema, "group has no elements");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
        throw Error(ErrorKind::Schema, "group has duplicate element labels");
    if (table_.size() != n) throw Error(ErrorKind::Schema, "group table has the wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(ErrorKind::Schema, "group table row has the wrong length");
        for (auto v : row)
            if (v >= n) throw Error(ErrorKind::Schema, "group table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::Invalid, "group table has no identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(ErrorKind::Invalid, "group table is not associative at (" + labels_[a] + ", " + labels_[b] +
                                                        ", " + labels_[c] + ")");
    for (std::size_t a = 0; a < n; ++a) inverse(a);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.push_back("1");
        for (std::size_t k = 1; k < n; ++k) labels.push_back(k == 1 ? "s" : "s" + std::to_string(k));
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup(std::move(labels), std::move(table));
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) return b;
    throw Error(ErrorKind::Invalid, "group element '" + labels_.at(a) + "' has no inverse");
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::Schema, "unknown group element '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(const std::vector<std::size_t>& gens) const {
    std::set<std::size_t> h{identity_};
    std::vector<std::size_t> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto x : frontier)
            for (auto g : gens) {
                const std::size_t y = mul(x, g);
                if (h.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {h.begin(), h.end()};
}

GaloisAnnotation GaloisAnnotation::all_trivial(std::size_t rank) {
    GaloisAnnotation a;
    a.simples.assign(rank, GaloisDatum{});
    return a;
}

bool GaloisAnnotation::is_all_trivial() const {
    return std::all_of(simples.begin(), simples.end(), [](const GaloisDatum& d) { return d.trivial; });
}

void check_annotation(const FusionData& data, const GaloisAnnotation& a) {
    if (a.simples.size() != data.rank())
        throw Error(ErrorKind::Invalid, "annotation covers " + std::to_string(a.simples.size()) + " simples, rank is " +
                                            std::to_string(data.rank()));
    for (std::size_t i = 0; i < data.rank(); ++i) {
        const GaloisDatum& g = a.simples[i];
        if (g.element) {
            if (!a.group) throw Error(ErrorKind::Invalid, "'" + data.label(i) + "' names a group element but no group is attached");
            if (*g.element >= a.group->order()) throw Error(ErrorKind::Invalid, "'" + data.label(i) + "': group element out of range");
            if (g.trivial != (*g.element == a.group->identity()))
                throw Error(ErrorKind::Invalid, "'" + data.label(i) + "': trivial flag disagrees with its group element");
        }
    }
    for (auto u : data.unit_set())
        if (!a.simples[u].trivial) throw Error(ErrorKind::Invalid, "unit simple '" + data.label(u) + "' must be Galois trivial");
    if (a.center_degree && *a.center_degree < 1) throw Error(ErrorKind::Schema, "center endomorphism degree must be positive");
}

AnnotatedFusion from_galois_group(const FiniteGroup& g, const std::vector<std::size_t>& subset_in, std::string name) {
    std::vector<std::size_t> subset(subset_in);
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const std::set<std::size_t> members(subset.begin(), subset.end());
    for (auto s : subset)
        if (s >= g.order()) throw Error(ErrorKind::Invalid, "subset element out of range");
    if (!members.count(g.identity())) throw Error(ErrorKind::Invalid, "subset must contain the identity");
    for (auto a : subset) {
        if (!members.count(g.inverse(a)))
            throw Error(ErrorKind::Invalid, "subset is not closed under inverses at '" + g.labels()[a] + "'");
        for (auto b : subset)
            if (!members.count(g.mul(a, b)))
                throw Error(ErrorKind::Invalid, "subset is not closed under products at (" + g.labels()[a] + ", " +
                                                    g.labels()[b] + ")");
    }

    const std::size_t r = subset.size();
    auto pos = [&](std::size_t elem) {
        return static_cast<std::size_t>(std::lower_bound(subset.begin(), subset.end(), elem) - subset.begin());
    };
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<Int>>> fusion(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r, Int(0))));
    std::vector<std::size_t> dual(r);
    GaloisAnnotation ann;
    ann.group = g;
    for (std::size_t i = 0; i < r; ++i) {
        labels.push_back(g.labels()[subset[i]]);
        dual[i] = pos(g.inverse(subset[i]));
        for (std::size_t j = 0; j < r; ++j) fusion[i][j][pos(g.mul(subset[i], subset[j]))] = 1;
        ann.simples.push_back(GaloisDatum{subset[i] == g.identity(), subset[i]});
    }
    FusionData data(std::move(name), std::move(labels), std::move(fusion), std::move(dual), std::vector<Int>(r, Int(1)),
                    Int(static_cast<unsigned long>(g.order())), {pos(g.identity())});
    return {share(std::move(data)), std::move(ann)};
}

FusionData galois_trivial_subring(const AnnotatedFusion& a) {
    const FusionData& d = *a.data;
    check_annotation(d, a.annotation);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (a.annotation.simples[i].trivial) keep.push_back(i);
    std::vector<long> pos(d.rank(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<long>(i);

    const std::size_t r = keep.size();
    std::vector<std::vector<std::vector<Int>>> fusion(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r, Int(0))));
    std::vector<std::size_t> dual(r);
    std::vector<std::string> labels;
    std::vector<Int> eps;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t x = keep[i];
        labels.push_back(d.label(x));
        eps.push_back(d.eps(x));
        if (pos[d.dual(x)] < 0)
            throw Error(ErrorKind::Invalid, "dual of Galois trivial '" + d.label(x) + "' is not Galois trivial");
        dual[i] = static_cast<std::size_t>(pos[d.dual(x)]);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t z = 0; z < d.rank(); ++z) {
                const Int& n = d.N(x, keep[j], z);
                if (n == 0) continue;
                if (pos[z] < 0)
                    throw Error(ErrorKind::Invalid, "Galois trivial simples are not closed: " + d.label(x) + " * " +
                                                        d.label(keep[j]) + " contains '" + d.label(z) + "'");
                fusion[i][j][static_cast<std::size_t>(pos[z])] = n;
            }
    }
    std::vector<std::size_t> unit;
    for (auto u : d.unit_set()) unit.push_back(static_cast<std::size_t>(pos[u]));
    return FusionData(d.name() + "/galois-trivial", std::move(labels), std::move(fusion), std::move(dual), std::move(eps),
                      d.endo_degree(), std::move(unit));
}

Int center_endo_degree(const AnnotatedFusion& a) {
    const FusionData& d = *a.data;
    const GaloisAnnotation& ann = a.annotation;
    check_annotation(d, ann);
    std::optional<Int> computed;
    if (ann.is_all_trivial()) {
        computed = d.endo_degree();
    } else if (ann.group && ann.group->is_abelian() &&
               std::all_of(ann.simples.begin(), ann.simples.end(), [](const GaloisDatum& g) { return g.trivial || g.element; })) {
        std::vector<std::size_t> gens;
        for (const auto& g : ann.simples)
            if (g.element) gens.push_back(*g.element);
        const Int h = static_cast<unsigned long>(ann.group->generated_subgroup(gens).size());
        if (d.endo_degree() % h != 0)
            throw Error(ErrorKind::Invalid, "subgroup order " + h.get_str() + " does not divide endo_degree " + d.endo_degree().get_str());
        computed = d.endo_degree() / h;
    }
    if (computed) {
        if (ann.center_degree && *ann.center_degree != *computed)
            throw Error(ErrorKind::Invalid, "supplied center degree " + ann.center_degree->get_str() +
                                                " contradicts the computed value " + computed->get_str());
        return *computed;
    }
    if (ann.center_degree) return *ann.center_degree;
    throw Error(ErrorKind::InsufficientData,
                "center endomorphism degree needs an abelian group annotation or a user-supplied value");
}

CenterPrediction center_fpdim_prediction(const AnnotatedFusion& a, const FpOptions& options) {
    const FusionData& d = *a.data;
    const AlgebraicNumber dim = fpdim_category(a.data, options);
    const Int dz = center_endo_degree(a);
    const FusionRef image = share(galois_trivial_subring(a));
    const AlgebraicNumber dim_image = fpdim_category(image, options);
    AlgebraicNumber squared = product(dim, dim);
    Rational degrees(dz, d.endo_degree());
    degrees.canonicalize();
    AlgebraicNumber predicted = scale(product(dim_image, dim), degrees);
    const int c = compare(predicted, squared);
    return {std::move(predicted), std::move(squared), dz, c <= 0, c == 0, a.annotation.is_all_trivial()};
}

}  // namespace fpdim
