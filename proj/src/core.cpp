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

#include "fpdim/core.hpp"

#include <sstream>

namespace fpdim {

FusionData::FusionData(std::string name, std::vector<std::string> labels,
                       const std::vector<std::vector<std::vector<Int>>>& fusion, std::vector<std::size_t> dual,
                       std::vector<Int> eps, Int endo_degree, const std::vector<std::size_t>& unit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      dual_(std::move(dual)),
      eps_(std::move(eps)),
      endo_degree_(std::move(endo_degree)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw Error(ErrorKind::Schema, "fusion data needs at least one simple");
    for (std::size_t i = 0; i < r; ++i) {
        if (labels_[i].empty()) throw Error(ErrorKind::Schema, "empty label");
        if (!index_.emplace(labels_[i], i).second) throw Error(ErrorKind::Schema, "duplicate label '" + labels_[i] + "'");
    }
    if (fusion.size() != r) throw Error(ErrorKind::Schema, "fusion tensor has wrong first dimension");
    fusion_.reserve(r * r * r);
    for (std::size_t i = 0; i < r; ++i) {
        if (fusion[i].size() != r) throw Error(ErrorKind::Schema, "fusion tensor has wrong second dimension");
        for (std::size_t j = 0; j < r; ++j) {
            if (fusion[i][j].size() != r) throw Error(ErrorKind::Schema, "fusion tensor has wrong third dimension");
            for (std::size_t k = 0; k < r; ++k) {
                if (sgn(fusion[i][j][k]) < 0)
                    throw Error(ErrorKind::Schema, "negative multiplicity for " + labels_[i] + "|" + labels_[j] + " -> " + labels_[k]);
                fusion_.push_back(fusion[i][j][k]);
            }
        }
    }
    if (dual_.size() != r) throw Error(ErrorKind::Schema, "dual map has wrong length");
    for (std::size_t i = 0; i < r; ++i)
        if (dual_[i] >= r) throw Error(ErrorKind::Schema, "dual of '" + labels_[i] + "' out of range");
    if (eps_.size() != r) throw Error(ErrorKind::Schema, "endo_dim list has wrong length");
    for (std::size_t i = 0; i < r; ++i)
        if (eps_[i] < 1) throw Error(ErrorKind::Schema, "endo_dim of '" + labels_[i] + "' must be a positive integer");
    if (endo_degree_ < 1) throw Error(ErrorKind::Schema, "endo_degree must be a positive integer");
    if (unit.empty()) throw Error(ErrorKind::Schema, "unit must be nonempty");
    unit_.assign(r, Int(0));
    for (std::size_t u : unit) {
        if (u >= r) throw Error(ErrorKind::Schema, "unit index out of range");
        unit_[u] += 1;
    }
}

std::size_t FusionData::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorKind::Schema, "unknown label '" + label + "' in " + name_);
    return it->second;
}

std::optional<std::size_t> FusionData::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> FusionData::unit_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank(); ++i)
        if (unit_[i] != 0) out.push_back(i);
    return out;
}

bool FusionData::is_fusion() const { return unit_set().size() == 1; }

std::size_t FusionData::unit_index() const {
    auto units = unit_set();
    if (units.size() != 1) throw Error(ErrorKind::NotFusion, "'" + name_ + "' is multifusion (unit is not simple)");
    return units.front();
}

namespace {

std::vector<std::vector<std::vector<Int>>> unflatten(const FusionData& d) {
    const std::size_t r = d.rank();
    std::vector<std::vector<std::vector<Int>>> t(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) t[i][j][k] = d.N(i, j, k);
    return t;
}

std::vector<std::size_t> unit_list(const FusionData& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (Int m = d.unit_multiplicities()[i]; m > 0; --m) out.push_back(i);
    return out;
}

}  // namespace

FusionData FusionData::with_coefficient(std::size_t i, std::size_t j, std::size_t k, const Int& value) const {
    auto t = unflatten(*this);
    t.at(i).at(j).at(k) = value;
    return FusionData(name_, labels_, t, dual_, eps_, endo_degree_, unit_list(*this));
}

FusionData FusionData::with_eps(std::vector<Int> eps) const {
    return FusionData(name_, labels_, unflatten(*this), dual_, std::move(eps), endo_degree_, unit_list(*this));
}

FusionData FusionData::with_endo_degree(Int d) const {
    return FusionData(name_, labels_, unflatten(*this), dual_, eps_, std::move(d), unit_list(*this));
}

bool FusionData::same_content(const FusionData& other) const {
    return labels_ == other.labels_ && fusion_ == other.fusion_ && dual_ == other.dual_ && eps_ == other.eps_ &&
           endo_degree_ == other.endo_degree_ && unit_ == other.unit_;
}

bool FusionData::memo(const std::string& key, const std::function<bool()>& compute) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->flags.find(key);
        if (it != cache_->flags.end()) return it->second;
    }
    const bool value = compute();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->flags.emplace(key, value);
    return value;
}

// ---------------------------------------------------------------------------

Element::Element(FusionRef ctx, std::vector<Int> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) throw Error(ErrorKind::ContextMismatch, "element without fusion data");
    if (coeffs_.size() != ctx_->rank()) throw Error(ErrorKind::ContextMismatch, "element has wrong rank");
    for (const auto& c : coeffs_)
        if (sgn(c) < 0) throw Error(ErrorKind::Domain, "element coefficients must be nonnegative");
}

Element Element::zero(FusionRef ctx) {
    const std::size_t r = ctx->rank();
    return Element(std::move(ctx), std::vector<Int>(r, Int(0)));
}

Element Element::basis(FusionRef ctx, std::size_t i) {
    std::vector<Int> c(ctx->rank(), Int(0));
    c.at(i) = 1;
    return Element(std::move(ctx), std::move(c));
}

Element Element::basis(FusionRef ctx, const std::string& label) {
    const std::size_t i = ctx->index_of(label);
    return basis(std::move(ctx), i);
}

Element Element::unit(FusionRef ctx) {
    auto c = ctx->unit_multiplicities();
    return Element(std::move(ctx), std::move(c));
}

Element Element::all_simples(FusionRef ctx) {
    const std::size_t r = ctx->rank();
    return Element(std::move(ctx), std::vector<Int>(r, Int(1)));
}

std::vector<std::size_t> Element::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.push_back(i);
    return out;
}

bool Element::is_zero() const { return support().empty(); }

static void require_same(const Element& a, const Element& b) {
    if (a.context() != b.context())
        throw Error(ErrorKind::ContextMismatch,
                    "elements belong to different fusion data ('" + a.data().name() + "' vs '" + b.data().name() + "')");
}

Element Element::operator+(const Element& rhs) const {
    require_same(*this, rhs);
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return Element(ctx_, std::move(c));
}

Element Element::scaled(const Int& n) const {
    auto c = coeffs_;
    for (auto& x : c) x *= n;
    return Element(ctx_, std::move(c));
}

bool Element::operator==(const Element& rhs) const { return ctx_ == rhs.ctx_ && coeffs_ == rhs.coeffs_; }

std::string Element::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeffs_[i] != 1) os << coeffs_[i].get_str() << '*';
        os << ctx_->label(i);
    }
    if (first) os << '0';
    return os.str();
}

Element multiply(const Element& a, const Element& b) {
    require_same(a, b);
    const FusionData& d = a.data();
    const std::size_t r = d.rank();
    std::vector<Int> out(r, Int(0));
    for (std::size_t i : a.support())
        for (std::size_t j : b.support()) {
            const Int w = a[i] * b[j];
            for (std::size_t k = 0; k < r; ++k)
                if (d.N(i, j, k) != 0) out[k] += w * d.N(i, j, k);
        }
    return Element(a.context(), std::move(out));
}

Comparison compare(const Element& a, const Element& b) {
    require_same(a, b);
    bool leq = true, geq = true;
    std::vector<Int> meet(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (a[i] > b[i]) leq = false;
        if (a[i] < b[i]) geq = false;
        meet[i] = a[i] < b[i] ? a[i] : b[i];
    }
    return {leq, geq, Element(a.context(), std::move(meet))};
}

Element dual_element(const Element& a) {
    std::vector<Int> c(a.rank(), Int(0));
    for (std::size_t i = 0; i < a.rank(); ++i) c[a.data().dual(i)] += a[i];
    return Element(a.context(), std::move(c));
}

std::vector<std::string> unit_problems(const FusionData& d) {
    std::vector<std::string> problems;
    const auto units = d.unit_set();
    const std::size_t r = d.rank();
    for (std::size_t u : units)
        if (d.unit_multiplicities()[u] != 1)
            problems.push_back("unit summand '" + d.label(u) + "' has multiplicity " +
                               d.unit_multiplicities()[u].get_str() + " (must be 1)");
    for (std::size_t a : units)
        for (std::size_t b : units)
            for (std::size_t k = 0; k < r; ++k) {
                const Int expected = (a == b && k == a) ? 1 : 0;
                if (d.N(a, b, k) != expected)
                    problems.push_back("unit summands '" + d.label(a) + "'*'" + d.label(b) + "' have coefficient " +
                                       d.N(a, b, k).get_str() + " on '" + d.label(k) + "', expected " + expected.get_str());
            }
    // 1 * x = x = x * 1 for the declared unit, multiplicities included.
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t k = 0; k < r; ++k) {
            Int left = 0, right = 0;
            for (std::size_t u : units) {
                left += d.unit_multiplicities()[u] * d.N(u, x, k);
                right += d.unit_multiplicities()[u] * d.N(x, u, k);
            }
            const Int expected = (k == x) ? 1 : 0;
            if (left != expected)
                problems.push_back("left unit law fails at '" + d.label(x) + "': coefficient of '" + d.label(k) + "' is " +
                                   left.get_str());
            if (right != expected)
                problems.push_back("right unit law fails at '" + d.label(x) + "': coefficient of '" + d.label(k) +
                                   "' is " + right.get_str());
        }
    return problems;
}

std::vector<std::size_t> unit_decomposition(const FusionData& d) {
    auto problems = unit_problems(d);
    if (!problems.empty()) throw Error(ErrorKind::Invalid, problems.front());
    return d.unit_set();
}

Rational pairing(const Element& a, const Element& b) {
    require_same(a, b);
    const FusionData& d = a.data();
    if (!d.is_fusion()) throw Error(ErrorKind::NotFusion, "pairing needs fusion data; '" + d.name() + "' is multifusion");
    Int total = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) total += a[i] * b[i] * d.eps(i);
    return Rational(total * d.endo_degree());
}

}  // namespace fpdim
