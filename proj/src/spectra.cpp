#include "rigged/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

double bessel_bound(const SampledMap& map) {
    return std::max(0.0, hermitian_eig(frame_matrix(map)).eigenvalues.back());
}

namespace {

std::vector<double> order_constants(const SampledMap& map, std::size_t max_order) {
    const ComplexMatrix b = weighted_analysis_matrix(map);
    std::vector<double> out;
    for (std::size_t k = 0; k <= max_order; ++k) {
        const SvdResult s = svd(b * map.triple().inverse_weight_matrix(k));
        out.push_back(s.singular_values.empty() ? 0.0 : s.singular_values.front());
    }
    return out;
}

} // namespace

BesselCertificate bessel_certificate(const SampledMap& map, const TripleSpec& spec, const SampledMap* companion) {
    if (spec.dim != map.dim()) throw DimMismatch("triple dimension does not match the map");
    BesselCertificate cert;
    if (companion == nullptr) {
        cert.constants = order_constants(map, 0);
        cert.order = 0;
        cert.constant = std::sqrt(bessel_bound(map));
        return cert;
    }
    const std::size_t max_order = std::min(spec.max_order, companion->triple().max_order);
    cert.family_tested = true;
    cert.constants = order_constants(map, max_order);
    cert.companion_constants = order_constants(*companion, max_order);
    for (std::size_t k = 0; k <= max_order; ++k) {
        if (cert.companion_constants[k] <= kFamilyGrowthFactor * cert.constants[k]) {
            cert.order = k;
            cert.constant = cert.constants[k];
            return cert;
        }
    }
    throw CertificateUnstable("no seminorm order up to " + std::to_string(max_order) +
                              " keeps the Bessel constant bounded across the dimension family");
}

double riesz_fischer_lower_bound(const SampledMap& map) {
    // lambda_min(G) = sigma_min(D)^2 over node space; taken from the SVD so that
    // a node count above d gives an exact zero rather than roundoff.
    const SvdResult s = svd(weighted_synthesis_matrix(map));
    if (s.singular_values.size() < map.node_count()) return 0.0;
    const double sigma = s.singular_values.back();
    return sigma * sigma;
}

FrameBounds frame_bounds(const SampledMap& map) {
    const HermitianEigenResult e = hermitian_eig(frame_matrix(map));
    return {std::max(0.0, e.eigenvalues.front()), std::max(0.0, e.eigenvalues.back())};
}

bool is_frame(const FrameBounds& b, double frame_tol) { return b.upper > 0.0 && b.lower > frame_tol * b.upper; }

bool upper_semiframe_check(const SampledMap& map, double tol, double rank_tol) {
    if (!is_total(map, rank_tol)) return false;
    const FrameBounds b = frame_bounds(map);
    return b.lower <= tol * b.upper;
}

Classification classify(const SampledMap& map, const TripleSpec& spec, const Tolerances& tol,
                        const SampledMap* companion) {
    Classification c;
    c.tolerances = tol;
    c.bounds = frame_bounds(map);
    c.bessel_bound = c.bounds.upper;
    c.bessel = bessel_certificate(map, spec, companion);
    c.bounded_bessel = std::isfinite(c.bessel_bound);
    c.bounded_in_family = c.bessel.order == 0;
    c.total = is_total(map, tol.rank_tol);
    c.mu_independent = is_mu_independent(map, tol.rank_tol);
    c.frame = is_frame(c.bounds, tol.frame_tol);
    c.upper_semiframe = c.total && c.bounded_bessel && c.bounds.lower <= tol.frame_tol * c.bounds.upper;
    c.riesz_fischer_lower_bound = riesz_fischer_lower_bound(map);
    c.certificate = rf_certificate(map, tol.rank_tol, tol.probes, tol.seed);
    c.riesz_fischer = c.certificate.holds;

    const ComplexMatrix g = gram_matrix(map);
    c.min_row_norm_sq = g(0, 0).real();
    c.max_row_norm_sq = g(0, 0).real();
    for (std::size_t i = 1; i < g.rows(); ++i) {
        c.min_row_norm_sq = std::min(c.min_row_norm_sq, g(i, i).real());
        c.max_row_norm_sq = std::max(c.max_row_norm_sq, g(i, i).real());
    }
    return c;
}

} // namespace rigged
