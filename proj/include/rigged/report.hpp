#pragma once

#include <json.hpp>

#include "rigged/moment.hpp"
#include "rigged/spectra.hpp"

namespace rigged {

// Serializers for the report document. Every boolean flag is emitted next to
// the tolerance that decided it.
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const FrameBounds& b);
nlohmann::json to_json(const RFCertificate& c);
nlohmann::json to_json(const EquivalenceReport& e);
nlohmann::json to_json(const MomentSolution& s);
nlohmann::json to_json(const Tolerances& t);

} // namespace rigged
