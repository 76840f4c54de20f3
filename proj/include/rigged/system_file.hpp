#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rigged/errors.hpp"
#include "rigged/gallery.hpp"
#include "rigged/wmap.hpp"

namespace rigged {

/// Malformed system, moment, or report input.
class SchemaError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A system read from disk. Gallery references also carry the companion map
/// used for dimension-family tests.
struct LoadedSystem {
    SampledMap map;
    std::optional<SampledMap> companion;
    std::optional<GallerySpec> gallery;
};

/// Parses a system document:
///   {"triple": {dim, max_order}, "measure": {kind, a, b, N | nodes, weights}, "table": [[[re, im], ...], ...]}
/// or {"gallery": {"name": ..., "params": {...}}}.
LoadedSystem parse_system(const nlohmann::json& doc);
LoadedSystem parse_system_text(std::string_view text);

/// Materialized table form; nodes and weights are written explicitly so the
/// map is reproduced bit for bit.
nlohmann::json system_to_json(const SampledMap& map);
nlohmann::json gallery_reference_json(const GallerySpec& spec);

/// Moment targets as an array of N complex values ([re, im] or plain numbers).
L2Function parse_moments(const nlohmann::json& doc, std::size_t expected);

/// nlohmann::json::parse with errors mapped onto SchemaError.
nlohmann::json parse_json_text(std::string_view text);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, std::string_view where);

} // namespace rigged
