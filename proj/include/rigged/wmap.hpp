#pragma once

#include "rigged/gelfand.hpp"
#include "rigged/linalg.hpp"
#include "rigged/measure.hpp"

namespace rigged {

/// Weakly measurable map x -> omega_x in D^x, tabulated at the nodes of a
/// MeasureSpace: table(i, n) = <e_n, omega_{x_i}>.
///
/// Row i in DualVector coordinates is conj(table(i, :)), so that
/// pairing(f, row) = sum_n table(i, n) f_n = <f, omega_{x_i}>.
class SampledMap {
public:
    SampledMap(ComplexMatrix table, MeasureSpace ms, TripleSpec triple);

    const ComplexMatrix& table() const noexcept { return table_; }
    const MeasureSpace& measure() const noexcept { return ms_; }
    const TripleSpec& triple() const noexcept { return triple_; }

    std::size_t node_count() const noexcept { return table_.rows(); }
    std::size_t dim() const noexcept { return table_.cols(); }

    DualVector functional(std::size_t i) const;

private:
    ComplexMatrix table_;
    MeasureSpace ms_;
    TripleSpec triple_;
};

/// (C_omega f)(x_i) = <f, omega_{x_i}>.
L2Function analysis(const SampledMap& map, const DVector& f);

/// D_omega xi = Lambda_omega^xi, with
///   pairing(f, D xi) = l2_inner(C f, xi)
///   pairing(D xi, f) = sum_i xi(x_i) <omega_{x_i}, f> mu_i.
DualVector synthesis(const SampledMap& map, const L2Function& xi);

/// N x d, equal to the table.
ComplexMatrix analysis_matrix(const SampledMap& map);
/// d x N, dagger(table) * diag(mu).
ComplexMatrix synthesis_matrix(const SampledMap& map);
/// diag(sqrt(mu)) * table: the analysis operator as a map H -> l^2 isometric
/// to L^2(X, mu).
ComplexMatrix weighted_analysis_matrix(const SampledMap& map);
/// dagger(table) * diag(sqrt(mu)): the synthesis operator on l^2 coordinates.
ComplexMatrix weighted_synthesis_matrix(const SampledMap& map);

/// S = D C, d x d Hermitian PSD.
ComplexMatrix frame_matrix(const SampledMap& map);

/// G(i, j) = sqrt(mu_i mu_j) <row_j, row_i>, N x N Hermitian PSD; the
/// nonzero spectrum is shared with frame_matrix.
ComplexMatrix gram_matrix(const SampledMap& map);

/// ker C_omega = {0} at relative singular-value tolerance.
bool is_total(const SampledMap& map, double tol = kDefaultRankTol);

/// ker D_omega = {0} on node space at relative singular-value tolerance.
bool is_mu_independent(const SampledMap& map, double tol = kDefaultRankTol);

} // namespace rigged
