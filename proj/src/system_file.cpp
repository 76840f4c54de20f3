#include "rigged/system_file.hpp"

#include <cmath>
#include <string>

namespace rigged {

using nlohmann::json;

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::out_of_range& e) {
        throw SchemaError(std::string("non-finite number in input: ") + e.what());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, std::string_view where) {
    auto finite = [&](double v) {
        if (!std::isfinite(v)) throw SchemaError("non-finite entry in " + std::string(where));
        return v;
    };
    if (j.is_number()) return {finite(j.get<double>()), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {finite(j[0].get<double>()), finite(j[1].get<double>())};
    throw SchemaError("complex entries in " + std::string(where) + " must be [re, im] pairs");
}

namespace {

const json& require(const json& obj, const char* key, std::string_view where) {
    if (!obj.is_object()) throw SchemaError(std::string(where) + " must be an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError("missing \"" + std::string(key) + "\" in " + std::string(where));
    return *it;
}

std::size_t require_count(const json& obj, const char* key, std::string_view where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw SchemaError("\"" + std::string(key) + "\" in " + std::string(where) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

double require_real(const json& obj, const char* key, std::string_view where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) throw SchemaError("\"" + std::string(key) + "\" in " + std::string(where) + " must be a number");
    return v.get<double>();
}

std::vector<double> real_array(const json& v, std::string_view where) {
    if (!v.is_array()) throw SchemaError(std::string(where) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) throw SchemaError(std::string(where) + " must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

MeasureSpace parse_measure(const json& m) {
    const json& kind_json = require(m, "kind", "measure");
    if (!kind_json.is_string()) throw SchemaError("measure kind must be a string");
    const MeasureKind kind = measure_kind_from_string(kind_json.get<std::string>());

    if (m.contains("nodes") || m.contains("weights")) {
        std::vector<double> nodes = real_array(require(m, "nodes", "measure"), "measure nodes");
        std::vector<double> weights = real_array(require(m, "weights", "measure"), "measure weights");
        if (nodes.size() != weights.size()) throw SchemaError("shape mismatch: measure nodes and weights differ in length");
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (!(weights[i] > 0.0)) throw SchemaError("nonpositive weight at index " + std::to_string(i));
        return MeasureSpace(std::move(nodes), std::move(weights), kind);
    }
    switch (kind) {
    case MeasureKind::counting: return make_counting(require_count(m, "N", "measure"));
    case MeasureKind::trapezoid_periodic:
        return make_uniform(require_real(m, "a", "measure"), require_real(m, "b", "measure"),
                            require_count(m, "N", "measure"), true);
    case MeasureKind::simpson:
        return make_uniform(require_real(m, "a", "measure"), require_real(m, "b", "measure"),
                            require_count(m, "N", "measure"), false);
    case MeasureKind::custom: break;
    }
    throw SchemaError("custom measure requires explicit nodes and weights");
}

GallerySpec parse_gallery_spec(const json& g) {
    const json& name = require(g, "name", "gallery");
    if (!name.is_string()) throw SchemaError("gallery name must be a string");
    GallerySpec spec{name.get<std::string>(), {}};
    if (g.contains("params")) {
        const json& p = g["params"];
        if (!p.is_object()) throw SchemaError("gallery params must be an object");
        for (const auto& [key, value] : p.items()) {
            if (!value.is_number()) throw SchemaError("gallery parameter '" + key + "' must be a number");
            spec.params[key] = value.get<double>();
        }
    }
    return spec;
}

} // namespace

LoadedSystem parse_system(const json& doc) {
    if (!doc.is_object()) throw SchemaError("system file must be a JSON object");
    const bool has_table = doc.contains("table");
    const bool has_gallery = doc.contains("gallery");
    if (has_table == has_gallery) throw SchemaError("system file needs exactly one of \"table\" or \"gallery\"");

    if (has_gallery) {
        GallerySpec spec = parse_gallery_spec(doc["gallery"]);
        try {
            GallerySystem g = make_gallery(spec);
            return {std::move(g.map), std::move(g.companion), std::move(g.spec)};
        } catch (const BadParams& e) {
            throw SchemaError(e.what());
        }
    }

    const json& triple_json = require(doc, "triple", "system file");
    const std::size_t dim = require_count(triple_json, "dim", "triple");
    const std::size_t max_order = require_count(triple_json, "max_order", "triple");
    if (dim == 0) throw SchemaError("triple dim must be positive");
    const MeasureSpace ms = parse_measure(require(doc, "measure", "system file"));

    const json& rows = doc["table"];
    if (!rows.is_array()) throw SchemaError("table must be an array of rows");
    if (rows.size() != ms.size()) {
        throw SchemaError("shape mismatch: table has " + std::to_string(rows.size()) + " rows, measure has " +
                          std::to_string(ms.size()) + " nodes");
    }
    ComplexMatrix table(ms.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim) {
            throw SchemaError("shape mismatch: table row " + std::to_string(i) + " must have " + std::to_string(dim) +
                              " entries");
        }
        for (std::size_t n = 0; n < dim; ++n) table(i, n) = complex_from_json(rows[i][n], "table");
    }
    return {SampledMap(std::move(table), ms, TripleSpec(dim, max_order)), std::nullopt, std::nullopt};
}

LoadedSystem parse_system_text(std::string_view text) { return parse_system(parse_json_text(text)); }

json system_to_json(const SampledMap& map) {
    json rows = json::array();
    for (std::size_t i = 0; i < map.node_count(); ++i) {
        json row = json::array();
        for (const auto& z : map.table().row(i)) row.push_back(complex_to_json(z));
        rows.push_back(std::move(row));
    }
    return json{
        {"triple", {{"dim", map.triple().dim}, {"max_order", map.triple().max_order}}},
        {"measure",
         {{"kind", std::string(to_string(map.measure().kind()))},
          {"nodes", map.measure().nodes()},
          {"weights", map.measure().weights()}}},
        {"table", std::move(rows)},
    };
}

json gallery_reference_json(const GallerySpec& spec) {
    return json{{"gallery", {{"name", spec.name}, {"params", spec.params}}}};
}

L2Function parse_moments(const json& doc, std::size_t expected) {
    if (!doc.is_array()) throw SchemaError("moments must be a JSON array");
    if (doc.size() != expected) {
        throw SchemaError("moments length " + std::to_string(doc.size()) + " does not match node count " +
                          std::to_string(expected));
    }
    L2Function h;
    h.values.reserve(doc.size());
    for (const auto& v : doc) h.values.push_back(complex_from_json(v, "moments"));
    return h;
}

} // namespace rigged
