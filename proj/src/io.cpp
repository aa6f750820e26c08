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

#include "fpdim/io.hpp"

#include <map>
#include <set>

namespace fpdim {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Schema, where + ": " + what);
}

Int read_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            schema(where, "'" + j.get<std::string>() + "' is not an integer");
        }
    }
    schema(where, "expected an integer, got " + std::string(j.type_name()));
}

Json write_int(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

std::string read_string(const Json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string, got " + std::string(j.type_name()));
    return j.get<std::string>();
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::optional<FiniteGroup> read_group(const Json& root) {
    const auto it = root.find("group");
    if (it == root.end() || it->is_null()) return std::nullopt;
    const Json& g = *it;
    if (!g.is_object()) schema("group", "expected an object");
    const Json& elems = require(g, "elements", "group");
    if (!elems.is_array()) schema("group.elements", "expected an array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elems.size(); ++i) labels.push_back(read_string(elems[i], "group.elements[" + std::to_string(i) + "]"));
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
    const Json& table = require(g, "table", "group");
    if (!table.is_array()) schema("group.table", "expected an array of rows");
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string where = "group.table[" + std::to_string(i) + "]";
        if (!table[i].is_array()) schema(where, "expected an array");
        std::vector<std::size_t> row;
        for (std::size_t k = 0; k < table[i].size(); ++k) {
            const Json& cell = table[i][k];
            if (cell.is_string()) {
                const auto f = idx.find(cell.get<std::string>());
                if (f == idx.end()) schema(where, "unknown element '" + cell.get<std::string>() + "'");
                row.push_back(f->second);
            } else {
                const Int v = read_int(cell, where);
                if (v < 0 || v >= Int(static_cast<unsigned long>(labels.size()))) schema(where, "index out of range");
                row.push_back(v.get_ui());
            }
        }
        rows.push_back(std::move(row));
    }
    return FiniteGroup(std::move(labels), std::move(rows));
}

}  // namespace

std::string rational_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        if (r.get_den() == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Schema, "'" + s + "' is not a rational number");
    }
}

FixtureEntry fusion_from_json(const Json& root) {
    if (!root.is_object()) schema("document", "expected a JSON object");
    FixtureEntry entry;
    entry.name = root.contains("name") ? read_string(root["name"], "name") : std::string("unnamed");
    const Int endo = root.contains("endo_degree") ? read_int(root["endo_degree"], "endo_degree") : Int(1);

    const Json& simples = require(root, "simples", "document");
    if (!simples.is_array() || simples.empty()) schema("simples", "expected a nonempty array");
    const std::size_t r = simples.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) {
        const std::string where = "simples[" + std::to_string(i) + "]";
        if (!simples[i].is_object()) schema(where, "expected an object");
        std::string label = read_string(require(simples[i], "label", where), where + ".label");
        if (label.empty() || label.find('|') != std::string::npos) schema(where + ".label", "labels must be nonempty and free of '|'");
        labels.push_back(std::move(label));
    }
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i)
        if (!idx.emplace(labels[i], i).second) schema("simples", "duplicate label '" + labels[i] + "'");
    auto lookup = [&](const std::string& label, const std::string& where) {
        const auto it = idx.find(label);
        if (it == idx.end()) schema(where, "unknown label '" + label + "'");
        return it->second;
    };

    const std::optional<FiniteGroup> group = read_group(root);
    std::vector<std::size_t> dual(r);
    std::vector<Int> eps(r);
    GaloisAnnotation ann;
    ann.group = group;
    ann.simples.resize(r);
    bool any_galois = group.has_value();
    std::vector<std::optional<DivisionType>> types(r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::string where = "simples[" + std::to_string(i) + "]";
        const Json& s = simples[i];
        eps[i] = s.contains("endo_dim") ? read_int(s["endo_dim"], where + ".endo_dim") : Int(1);
        dual[i] = s.contains("dual") ? lookup(read_string(s["dual"], where + ".dual"), where + ".dual") : i;
        if (s.contains("division_type") && !s["division_type"].is_null())
            types[i] = parse_division_type(read_string(s["division_type"], where + ".division_type"));
        if (!s.contains("galois") || s["galois"].is_null()) continue;
        any_galois = true;
        const Json& g = s["galois"];
        if (g.is_string()) {
            const std::string v = g.get<std::string>();
            if (v == "trivial")
                ann.simples[i].trivial = true;
            else if (v == "nontrivial")
                ann.simples[i].trivial = false;
            else
                schema(where + ".galois", "expected null, \"trivial\", \"nontrivial\" or {\"group_element\": ...}");
        } else if (g.is_object()) {
            if (!group) schema(where + ".galois", "group_element given but the file has no \"group\"");
            const std::size_t e = group->index_of(read_string(require(g, "group_element", where + ".galois"), where + ".galois"));
            ann.simples[i] = GaloisDatum{e == group->identity(), e};
        } else {
            schema(where + ".galois", "unexpected " + std::string(g.type_name()));
        }
    }
    if (root.contains("center_endo_degree") && !root["center_endo_degree"].is_null()) {
        ann.center_degree = read_int(root["center_endo_degree"], "center_endo_degree");
        any_galois = true;
    }

    std::vector<std::size_t> unit;
    if (root.contains("unit")) {
        const Json& u = root["unit"];
        if (!u.is_array() || u.empty()) schema("unit", "expected a nonempty array of labels");
        for (std::size_t i = 0; i < u.size(); ++i)
            unit.push_back(lookup(read_string(u[i], "unit[" + std::to_string(i) + "]"), "unit[" + std::to_string(i) + "]"));
    } else {
        unit.push_back(lookup("1", "unit (default [\"1\"])"));
    }

    std::vector<std::vector<std::vector<Int>>> fusion(r, std::vector<std::vector<Int>>(r, std::vector<Int>(r, Int(0))));
    const Json& f = require(root, "fusion", "document");
    if (!f.is_object()) schema("fusion", "expected an object keyed by \"left|right\"");
    for (const auto& [key, out] : f.items()) {
        const std::string where = "fusion[\"" + key + "\"]";
        const auto bar = key.find('|');
        if (bar == std::string::npos) schema(where, "key must have the form \"left|right\"");
        const std::size_t x = lookup(key.substr(0, bar), where);
        const std::size_t y = lookup(key.substr(bar + 1), where);
        if (!out.is_object()) schema(where, "expected an object of multiplicities");
        for (const auto& [z, n] : out.items()) fusion[x][y][lookup(z, where)] = read_int(n, where + "[\"" + z + "\"]");
    }

    entry.data = share(FusionData(entry.name, labels, std::move(fusion), std::move(dual), std::move(eps), endo, std::move(unit)));
    if (any_galois) {
        check_annotation(*entry.data, ann);
        entry.galois = std::move(ann);
    }
    const bool any_type = std::any_of(types.begin(), types.end(), [](const auto& t) { return t.has_value(); });
    if (any_type) {
        SemisimpleDesc desc;
        desc.base_field = root.contains("base_field") ? read_string(root["base_field"], "base_field") : std::string("R");
        for (std::size_t i = 0; i < r; ++i) {
            if (!types[i]) schema("simples[" + std::to_string(i) + "]", "division_type missing while other simples have one");
            desc.simples.push_back({labels[i], *types[i], 1});
        }
        entry.description = std::move(desc);
    }
    if (root.contains("provenance") && !root["provenance"].is_null()) entry.provenance = read_string(root["provenance"], "provenance");
    return entry;
}

FixtureEntry parse_fusion_file(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
    return fusion_from_json(root);
}

Json fusion_to_json(const FixtureEntry& entry) {
    const FusionData& d = *entry.data;
    Json root = Json::object();
    root["name"] = d.name();
    root["endo_degree"] = write_int(d.endo_degree());
    Json unit = Json::array();
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (Int k = 0; k < d.unit_multiplicities()[i]; ++k) unit.push_back(d.label(i));
    root["unit"] = unit;

    const GaloisAnnotation* ann = entry.galois ? &*entry.galois : nullptr;
    Json simples = Json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
        Json s = Json::object();
        s["label"] = d.label(i);
        s["endo_dim"] = write_int(d.eps(i));
        s["dual"] = d.label(d.dual(i));
        if (!ann) {
            s["galois"] = nullptr;
        } else if (ann->simples[i].element) {
            s["galois"] = Json{{"group_element", ann->group->labels()[*ann->simples[i].element]}};
        } else {
            s["galois"] = ann->simples[i].trivial ? "trivial" : "nontrivial";
        }
        if (entry.description) s["division_type"] = to_string(entry.description->simples.at(i).type);
        simples.push_back(std::move(s));
    }
    root["simples"] = simples;

    Json fusion = Json::object();
    for (std::size_t x = 0; x < d.rank(); ++x)
        for (std::size_t y = 0; y < d.rank(); ++y) {
            Json out = Json::object();
            for (std::size_t z = 0; z < d.rank(); ++z)
                if (d.N(x, y, z) != 0) out[d.label(z)] = write_int(d.N(x, y, z));
            if (!out.empty()) fusion[d.label(x) + "|" + d.label(y)] = out;
        }
    root["fusion"] = fusion;

    if (ann && ann->group) {
        const FiniteGroup& g = *ann->group;
        Json table = Json::array();
        for (std::size_t a = 0; a < g.order(); ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.labels()[g.mul(a, b)]);
            table.push_back(row);
        }
        root["group"] = Json{{"elements", g.labels()}, {"table", table}};
    }
    if (ann && ann->center_degree) root["center_endo_degree"] = write_int(*ann->center_degree);
    if (entry.description) root["base_field"] = entry.description->base_field;
    if (!entry.provenance.empty()) root["provenance"] = entry.provenance;
    return root;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string emit_fusion_file(const FixtureEntry& entry) { return dump_canonical(fusion_to_json(entry)); }

SemiringMorphism parse_morphism_file(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) schema("document", "expected a JSON object");
    const FixtureEntry src = fusion_from_json(require(root, "source", "document"));
    const FixtureEntry tgt = fusion_from_json(require(root, "target", "document"));
    const Json& images = require(root, "images", "document");
    if (!images.is_object()) schema("images", "expected an object keyed by source label");
    std::vector<std::vector<Int>> cols(src.data->rank(), std::vector<Int>(tgt.data->rank(), Int(0)));
    std::set<std::size_t> seen;
    for (const auto& [x, out] : images.items()) {
        const auto xi = src.data->find(x);
        if (!xi) schema("images", "unknown source label '" + x + "'");
        seen.insert(*xi);
        if (!out.is_object()) schema("images[\"" + x + "\"]", "expected an object of multiplicities");
        for (const auto& [z, n] : out.items()) {
            const auto zi = tgt.data->find(z);
            if (!zi) schema("images[\"" + x + "\"]", "unknown target label '" + z + "'");
            cols[*xi][*zi] = read_int(n, "images[\"" + x + "\"][\"" + z + "\"]");
        }
    }
    for (std::size_t i = 0; i < src.data->rank(); ++i)
        if (!seen.count(i)) schema("images", "no image given for '" + src.data->label(i) + "'");
    std::optional<std::vector<Int>> twist;
    if (root.contains("twist") && !root["twist"].is_null()) {
        const Json& t = root["twist"];
        if (!t.is_object()) schema("twist", "expected an object of multiplicities");
        twist.emplace(src.data->rank(), Int(0));
        for (const auto& [x, n] : t.items()) {
            const auto xi = src.data->find(x);
            if (!xi) schema("twist", "unknown source label '" + x + "'");
            (*twist)[*xi] = read_int(n, "twist[\"" + x + "\"]");
        }
    }
    return SemiringMorphism(src.data, tgt.data, std::move(cols), std::move(twist));
}

std::string emit_morphism_file(const SemiringMorphism& f, const FixtureEntry& source, const FixtureEntry& target) {
    Json root = Json::object();
    root["source"] = fusion_to_json(source);
    root["target"] = fusion_to_json(target);
    Json images = Json::object();
    for (std::size_t i = 0; i < f.source()->rank(); ++i) {
        Json out = Json::object();
        for (std::size_t k = 0; k < f.target()->rank(); ++k)
            if (f.columns()[i][k] != 0) out[f.target()->label(k)] = write_int(f.columns()[i][k]);
        images[f.source()->label(i)] = out;
    }
    root["images"] = images;
    if (f.is_twisted()) {
        Json t = Json::object();
        const Element d = f.twist();
        for (std::size_t i = 0; i < d.rank(); ++i)
            if (d[i] != 0) t[f.source()->label(i)] = write_int(d[i]);
        root["twist"] = t;
    } else {
        root["twist"] = nullptr;
    }
    return dump_canonical(root);
}

Json algebraic_to_json(const AlgebraicNumber& a) {
    Json j = Json::object();
    j["value"] = a.is_exact() ? rational_string(a.lo()) : a.decimal();
    j["exact"] = a.is_exact();
    const Polynomial mp = min_poly(a);
    Json coeffs = Json::array();
    for (const auto& c : mp.coeffs()) coeffs.push_back(rational_string(c));
    j["min_poly"] = coeffs;
    j["interval"] = Json::array({rational_string(a.lo()), rational_string(a.hi())});
    j["algebraic_integer"] = mp.has_integer_coeffs();
    return j;
}

}  // namespace fpdim
