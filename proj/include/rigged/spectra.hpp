#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigged/moment.hpp"
#include "rigged/wmap.hpp"

namespace rigged {

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Seminorm certificate (int |<f, omega_x>|^2 dmu)^{1/2} <= constant * p_order(f).
struct BesselCertificate {
    std::size_t order = 0;
    double constant = 0.0;
    bool family_tested = false;
    std::vector<double> constants;            // c_k for k = 0..K on the map
    std::vector<double> companion_constants;  // c_k on the doubled-dimension companion
};

inline constexpr double kDefaultFrameTol = 1e-10;
inline constexpr double kFamilyGrowthFactor = 1.05;

struct Tolerances {
    double rank_tol = kDefaultRankTol;
    double frame_tol = kDefaultFrameTol;
    double residual_tol = kDefaultResidualTol;
    std::size_t probes = kDefaultProbes;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
};

struct Classification {
    BesselCertificate bessel;
    bool bounded_bessel = true;     // B < inf, always at finite dimension
    bool bounded_in_family = true;  // certificate order 0 across the dimension family
    double bessel_bound = 0.0;
    bool upper_semiframe = false;
    bool riesz_fischer = false;
    double riesz_fischer_lower_bound = 0.0;
    bool frame = false;
    FrameBounds bounds;
    bool total = false;
    bool mu_independent = false;
    double min_row_norm_sq = 0.0;  // literal reading: min_i mu_i ||omega_i||^2
    double max_row_norm_sq = 0.0;
    RFCertificate certificate;
    Tolerances tolerances;
};

/// lambda_max(S): the smallest B with int |<f, omega_x>|^2 dmu <= B ||f||^2.
double bessel_bound(const SampledMap& map);

/// Smallest order k whose constant c_k = sigma_max(sqrt(mu) T W_k^{-1}) stays
/// within kFamilyGrowthFactor when the dimension doubles. Without a companion
/// the answer is (0, sqrt(bessel_bound)). Throws CertificateUnstable when no
/// order passes.
BesselCertificate bessel_certificate(const SampledMap& map, const TripleSpec& spec,
                                     const SampledMap* companion = nullptr);

/// lambda_min(G): largest A with A sum |c_i|^2 <= || sum_i c_i sqrt(mu_i) omega_i ||^2.
/// Exactly 0 when there are more nodes than coordinates.
double riesz_fischer_lower_bound(const SampledMap& map);

FrameBounds frame_bounds(const SampledMap& map);
bool is_frame(const FrameBounds& b, double frame_tol = kDefaultFrameTol);

/// Total, Bessel-bounded, lower frame bound at most tol * B.
bool upper_semiframe_check(const SampledMap& map, double tol = kDefaultFrameTol, double rank_tol = kDefaultRankTol);

Classification classify(const SampledMap& map, const TripleSpec& spec, const Tolerances& tol = {},
                        const SampledMap* companion = nullptr);

} // namespace rigged
