#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rigged/gelfand.hpp"
#include "rigged/wmap.hpp"

namespace rigged {

inline constexpr double kDefaultResidualTol = 1e-8;
inline constexpr std::size_t kDefaultProbes = 100;

/// Minimum-norm least-squares solution of <f, omega_x> = h(x).
struct MomentSolution {
    DVector f;
    double residual = 0.0;  // ||C f - h||_mu
    bool unique = false;    // kernel_dim == 0, i.e. the map is total
    std::size_t kernel_dim = 0;
    std::size_t rank = 0;
    std::vector<double> decay;  // decay_profile(triple, f)
};

/// Finite witness for the lower-bound inequality
///   ||xi||_2 <= sup_{f in M} |int xi(x) <omega_x, f> dmu|
/// with M the Hilbert ball of radius 1 / sigma_min(D_omega).
struct RFCertificate {
    bool holds = false;
    double sigma_min_synthesis = 0.0;
    double sigma_max_synthesis = 0.0;
    std::optional<double> witness_radius;
    std::optional<BoundedSet> witness_set;
    std::optional<double> max_violation;  // worst ||xi|| - R ||D xi|| over unit probes
    std::size_t probes = 0;
    double rank_tol = kDefaultRankTol;
};

struct EquivalenceReport {
    bool agrees = false;
    bool certificate_holds = false;
    bool all_solvable = false;
    double worst_residual = 0.0;
    std::size_t trials = 0;
    double residual_tol = kDefaultResidualTol;
};

MomentSolution solve_moment(const SampledMap& map, const L2Function& h, double rank_tol = kDefaultRankTol);

RFCertificate rf_certificate(const SampledMap& map, double rank_tol = kDefaultRankTol,
                             std::size_t probes = kDefaultProbes, std::uint64_t seed = 0);

/// Certificate verdict against direct solvability of `trials` random moment
/// problems (residual < tol).
EquivalenceReport rf_equivalence_report(const SampledMap& map, std::size_t trials, double tol = kDefaultResidualTol,
                                        double rank_tol = kDefaultRankTol, std::uint64_t seed = 0);

bool rf_equivalence_check(const SampledMap& map, std::size_t trials, double tol = kDefaultResidualTol,
                          double rank_tol = kDefaultRankTol, std::uint64_t seed = 0);

/// Minimal C with p_k(f) <= C ||C_omega f||_mu for all f. Throws NotTotal for
/// a non-total map.
double stability_constant(const SampledMap& map, const TripleSpec& spec, std::size_t k,
                          double rank_tol = kDefaultRankTol);

/// S^{-1} S f through an explicit inverse of the frame matrix. Throws
/// NotAFrame when the lower frame bound is below frame_tol * B.
DVector dual_reconstruct(const SampledMap& map, const DVector& f, double frame_tol = kDefaultRankTol);

/// Table of the canonical dual system <e_n, S^{-1} omega_{x_i}> = (T S^{-1})(i, n).
ComplexMatrix dual_table(const SampledMap& map, double frame_tol = kDefaultRankTol);

/// Seeded complex Gaussian samples; stream selected by (seed, index).
std::vector<Complex> seeded_gaussian(std::size_t n, std::uint64_t seed, std::uint64_t index);

} // namespace rigged
