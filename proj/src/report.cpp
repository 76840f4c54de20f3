#include "rigged/report.hpp"

#include "rigged/system_file.hpp"

namespace rigged {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

json to_json(const Tolerances& t) {
    return {{"rank_tol", t.rank_tol}, {"frame_tol", t.frame_tol}, {"residual_tol", t.residual_tol},
            {"probes", t.probes},     {"trials", t.trials},       {"seed", t.seed}};
}

json to_json(const FrameBounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

json to_json(const RFCertificate& c) {
    json out{{"holds", c.holds},
             {"rank_tol", c.rank_tol},
             {"sigma_min_synthesis", c.sigma_min_synthesis},
             {"sigma_max_synthesis", c.sigma_max_synthesis},
             {"witness_radius", optional_json(c.witness_radius)},
             {"max_violation", optional_json(c.max_violation)},
             {"probes", c.probes}};
    if (c.witness_set) {
        out["witness_set"] = {{"kind", "seminorm-ball"}, {"order", c.witness_set->order}, {"radius", c.witness_set->radius},
                              {"canonical_choice", "Hilbert ball of minimal radius 1/sigma_min"}};
    } else {
        out["witness_set"] = nullptr;
    }
    return out;
}

json to_json(const EquivalenceReport& e) {
    return {{"agrees", e.agrees},
            {"certificate_holds", e.certificate_holds},
            {"all_solvable", e.all_solvable},
            {"worst_residual", e.worst_residual},
            {"trials", e.trials},
            {"residual_tol", e.residual_tol}};
}

json to_json(const MomentSolution& s) {
    json coords = json::array();
    for (const auto& z : s.f.coords) coords.push_back(complex_to_json(z));
    return {{"solution", std::move(coords)}, {"residual", s.residual}, {"unique", s.unique},
            {"kernel_dim", s.kernel_dim},    {"rank", s.rank},         {"decay_profile", s.decay}};
}

json to_json(const Classification& c) {
    const Tolerances& t = c.tolerances;
    auto flag = [](bool value, const char* tol_name, double tol) { return json{{"value", value}, {tol_name, tol}}; };
    return {
        {"bessel_certificate",
         {{"order", c.bessel.order},
          {"constant", c.bessel.constant},
          {"family_tested", c.bessel.family_tested},
          {"growth_factor", kFamilyGrowthFactor},
          {"constants", c.bessel.constants},
          {"companion_constants", c.bessel.companion_constants}}},
        {"bounded_bessel", {{"value", c.bounded_bessel}, {"B", c.bessel_bound}}},
        {"bounded_in_family", {{"value", c.bounded_in_family}, {"family_tested", c.bessel.family_tested},
                               {"growth_factor", kFamilyGrowthFactor}}},
        {"upper_semiframe", json{{"value", c.upper_semiframe}, {"frame_tol", t.frame_tol}, {"rank_tol", t.rank_tol}}},
        {"riesz_fischer", json{{"value", c.riesz_fischer}, {"rank_tol", t.rank_tol},
                               {"lower_bound", c.riesz_fischer_lower_bound}}},
        {"frame", json{{"value", c.frame}, {"frame_tol", t.frame_tol}, {"bounds", to_json(c.bounds)}}},
        {"total", flag(c.total, "rank_tol", t.rank_tol)},
        {"mu_independent", flag(c.mu_independent, "rank_tol", t.rank_tol)},
        {"literal_row_norms", {{"min", c.min_row_norm_sq}, {"max", c.max_row_norm_sq}}},
        {"tolerances", to_json(t)},
    };
}

} // namespace rigged
