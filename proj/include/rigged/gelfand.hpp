#pragma once

#include <cstddef>
#include <vector>

#include "rigged/linalg.hpp"

namespace rigged {

/// Finite model of the triple D[t] c H c D^x[t^x].
///
/// Coordinates are Hermite-type coefficients and D is described by the
/// polynomial weight family w_k(n) = (1 + n)^k, 0 <= k <= max_order. The
/// order-0 seminorm is the Hilbert norm and the weights increase with k, so
/// the seminorm topology is finer than the norm topology. The strong dual
/// topology on D^x has no content here beyond dual_seminorm().
struct TripleSpec {
    std::size_t dim = 1;
    std::size_t max_order = 0;

    TripleSpec() = default;
    TripleSpec(std::size_t dim, std::size_t max_order);

    double weight(std::size_t k, std::size_t n) const;
    /// diag(w_k(0), ..., w_k(dim-1)); throws OrderOutOfRange when k > max_order.
    ComplexMatrix weight_matrix(std::size_t k) const;
    ComplexMatrix inverse_weight_matrix(std::size_t k) const;

    bool operator==(const TripleSpec&) const = default;
};

/// Ball { f : p_k(f) <= radius } in D.
struct BoundedSet {
    std::size_t order = 0;
    double radius = 1.0;
};

/// Element of D in coordinates.
struct DVector {
    std::vector<Complex> coords;
};

/// Element of D^x in the same coordinates (pivot identification through H).
struct DualVector {
    std::vector<Complex> coords;
};

/// <f, F> = sum_n f_n conj(F_n): linear in f, conjugate linear in F.
Complex pairing(const DVector& f, const DualVector& big_f);
/// <F, f> := conj(<f, F>).
Complex pairing(const DualVector& big_f, const DVector& f);

/// p_k(f) = (sum_n w_k(n)^2 |f_n|^2)^{1/2}.
double seminorm(const TripleSpec& spec, std::size_t k, const DVector& f);

/// p_M(F) = sup_{g in M} |<g, F>| = R (sum_n |F_n|^2 / w_k(n)^2)^{1/2}.
double dual_seminorm(const TripleSpec& spec, const BoundedSet& m, const DualVector& big_f);

/// (p_0(f), ..., p_K(f)).
std::vector<double> decay_profile(const TripleSpec& spec, const DVector& f);

} // namespace rigged
