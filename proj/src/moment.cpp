#include "rigged/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

std::vector<Complex> seeded_gaussian(std::size_t n, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> out(n);
    for (auto& v : out) {
        const double re = normal(gen);
        const double im = normal(gen);
        v = Complex{re, im};
    }
    return out;
}

namespace {

// Least-squares machinery for <f, omega_x> = h(x) in the mu-weighted norm:
// minimize ||sqrt(mu) (T f - h)|| with the minimum-norm f.
class WeightedSolver {
public:
    WeightedSolver(const SampledMap& map, double rank_tol)
        : map_(map), weighted_(weighted_analysis_matrix(map)), svd_(svd(weighted_)) {
        rank_ = numerical_rank(svd_, rank_tol);
        pinv_ = ComplexMatrix(weighted_.cols(), weighted_.rows());
        for (std::size_t k = 0; k < rank_; ++k) {
            const double inv = 1.0 / svd_.singular_values[k];
            for (std::size_t i = 0; i < pinv_.rows(); ++i) {
                const Complex vi = svd_.right_vectors(i, k) * inv;
                for (std::size_t j = 0; j < pinv_.cols(); ++j) pinv_(i, j) += vi * std::conj(svd_.left_vectors(j, k));
            }
        }
    }

    MomentSolution solve(const L2Function& h) const {
        if (h.values.size() != map_.node_count()) {
            throw DimMismatch("moment vector has " + std::to_string(h.values.size()) + " entries, expected " +
                              std::to_string(map_.node_count()));
        }
        const auto& mu = map_.measure().weights();
        std::vector<Complex> y(h.values.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::sqrt(mu[i]) * h.values[i];

        MomentSolution out;
        out.f.coords = apply_pinv(y);
        std::vector<Complex> r = residual(out.f.coords, y);
        // One refinement step; corrections stay in the row space, so f keeps minimum norm.
        const std::vector<Complex> df = apply_pinv(r);
        std::vector<Complex> refined = out.f.coords;
        for (std::size_t n = 0; n < refined.size(); ++n) refined[n] -= df[n];
        std::vector<Complex> r2 = residual(refined, y);
        if (euclidean_norm(r2) < euclidean_norm(r)) {
            out.f.coords = std::move(refined);
            r = std::move(r2);
        }
        out.residual = euclidean_norm(r);
        out.rank = rank_;
        out.kernel_dim = map_.dim() - rank_;
        out.unique = out.kernel_dim == 0;
        out.decay = decay_profile(map_.triple(), out.f);
        return out;
    }

    const ComplexMatrix& pinv() const noexcept { return pinv_; }
    std::size_t rank() const noexcept { return rank_; }

private:
    // V Sigma^+ U^dagger y in factored form.
    std::vector<Complex> apply_pinv(const std::vector<Complex>& y) const {
        std::vector<Complex> f(weighted_.cols());
        for (std::size_t k = 0; k < rank_; ++k) {
            Complex c{};
            for (std::size_t j = 0; j < y.size(); ++j) c += std::conj(svd_.left_vectors(j, k)) * y[j];
            c /= svd_.singular_values[k];
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += svd_.right_vectors(i, k) * c;
        }
        return f;
    }

    std::vector<Complex> residual(const std::vector<Complex>& f, const std::vector<Complex>& y) const {
        std::vector<Complex> r = weighted_ * std::span<const Complex>(f);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
        return r;
    }

    const SampledMap& map_;
    ComplexMatrix weighted_;
    SvdResult svd_;
    ComplexMatrix pinv_;
    std::size_t rank_ = 0;
};

} // namespace

MomentSolution solve_moment(const SampledMap& map, const L2Function& h, double rank_tol) {
    if (!(rank_tol > 0.0)) throw ValidationError("rank_tol must be positive");
    return WeightedSolver(map, rank_tol).solve(h);
}

RFCertificate rf_certificate(const SampledMap& map, double rank_tol, std::size_t probes, std::uint64_t seed) {
    if (!(rank_tol > 0.0)) throw ValidationError("rank_tol must be positive");
    if (probes == 0) throw ValidationError("rf_certificate needs at least one probe");

    RFCertificate cert;
    cert.rank_tol = rank_tol;
    const SvdResult s = svd(weighted_synthesis_matrix(map));
    const std::size_t n = map.node_count();
    cert.sigma_max_synthesis = s.singular_values.empty() ? 0.0 : s.singular_values.front();
    // Singular values live on node space; a node count above d forces a kernel.
    cert.sigma_min_synthesis = s.singular_values.size() < n ? 0.0 : s.singular_values.back();
    cert.holds = cert.sigma_max_synthesis > 0.0 && cert.sigma_min_synthesis > rank_tol * cert.sigma_max_synthesis;
    if (!cert.holds) return cert;

    const double radius = 1.0 / cert.sigma_min_synthesis;
    cert.witness_radius = radius;
    cert.witness_set = BoundedSet{0, radius};
    cert.probes = probes;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < probes; ++p) {
        L2Function xi{seeded_gaussian(n, seed, p)};
        const double norm = l2_norm(map.measure(), xi);
        for (auto& v : xi.values) v /= norm;
        const double sup = dual_seminorm(map.triple(), *cert.witness_set, synthesis(map, xi));
        worst = std::max(worst, 1.0 - sup);
    }
    cert.max_violation = worst;
    return cert;
}

EquivalenceReport rf_equivalence_report(const SampledMap& map, std::size_t trials, double tol, double rank_tol,
                                        std::uint64_t seed) {
    if (trials == 0) throw ValidationError("equivalence check needs at least one trial");
    EquivalenceReport rep;
    rep.trials = trials;
    rep.residual_tol = tol;
    rep.certificate_holds = rf_certificate(map, rank_tol, 1, seed).holds;

    const WeightedSolver solver(map, rank_tol);
    rep.all_solvable = true;
    for (std::size_t t = 0; t < trials; ++t) {
        // Offset the stream so moment targets differ from certificate probes.
        const L2Function h{seeded_gaussian(map.node_count(), seed, 0x100000000ULL + t)};
        const double res = solver.solve(h).residual;
        rep.worst_residual = std::max(rep.worst_residual, res);
        if (!(res < tol)) rep.all_solvable = false;
    }
    rep.agrees = rep.certificate_holds == rep.all_solvable;
    return rep;
}

bool rf_equivalence_check(const SampledMap& map, std::size_t trials, double tol, double rank_tol,
                          std::uint64_t seed) {
    return rf_equivalence_report(map, trials, tol, rank_tol, seed).agrees;
}

double stability_constant(const SampledMap& map, const TripleSpec& spec, std::size_t k, double rank_tol) {
    if (spec.dim != map.dim()) throw DimMismatch("triple dimension does not match the map");
    if (k > spec.max_order) {
        throw OrderOutOfRange("seminorm order " + std::to_string(k) + " exceeds max_order " +
                              std::to_string(spec.max_order));
    }
    if (!is_total(map, rank_tol)) throw NotTotal("stability constant requires a total map");
    const WeightedSolver solver(map, rank_tol);
    const SvdResult s = svd(spec.weight_matrix(k) * solver.pinv());
    return s.singular_values.empty() ? 0.0 : s.singular_values.front();
}

namespace {

ComplexMatrix frame_inverse(const SampledMap& map, double frame_tol) {
    const HermitianEigenResult e = hermitian_eig(frame_matrix(map));
    const double lower = e.eigenvalues.front();
    const double upper = e.eigenvalues.back();
    if (!(upper > 0.0) || !(lower > frame_tol * upper)) {
        throw NotAFrame("lower frame bound " + std::to_string(lower) + " is not above frame_tol * B");
    }
    const std::size_t d = map.dim();
    ComplexMatrix inv(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double s = 1.0 / e.eigenvalues[k];
        for (std::size_t i = 0; i < d; ++i) {
            const Complex vi = e.eigenvectors(i, k) * s;
            for (std::size_t j = 0; j < d; ++j) inv(i, j) += vi * std::conj(e.eigenvectors(j, k));
        }
    }
    return inv;
}

} // namespace

DVector dual_reconstruct(const SampledMap& map, const DVector& f, double frame_tol) {
    if (f.coords.size() != map.dim()) throw DimMismatch("vector dimension does not match the map");
    const ComplexMatrix inv = frame_inverse(map, frame_tol);
    const DualVector sf = synthesis(map, analysis(map, f));
    return DVector{inv * std::span<const Complex>(sf.coords)};
}

ComplexMatrix dual_table(const SampledMap& map, double frame_tol) {
    return map.table() * frame_inverse(map, frame_tol);
}

} // namespace rigged
