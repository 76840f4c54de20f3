#include "rigged/gelfand.hpp"

#include <cmath>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

TripleSpec::TripleSpec(std::size_t dim_, std::size_t max_order_) : dim(dim_), max_order(max_order_) {
    if (dim == 0) throw ValidationError("triple dimension must be positive");
}

double TripleSpec::weight(std::size_t k, std::size_t n) const {
    return std::pow(1.0 + static_cast<double>(n), static_cast<double>(k));
}

namespace {

void check_order(const TripleSpec& spec, std::size_t k) {
    if (k > spec.max_order) {
        throw OrderOutOfRange("seminorm order " + std::to_string(k) + " exceeds max_order " +
                              std::to_string(spec.max_order));
    }
}

void check_dim(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw DimMismatch("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(got));
    }
}

} // namespace

ComplexMatrix TripleSpec::weight_matrix(std::size_t k) const {
    check_order(*this, k);
    ComplexMatrix w(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) w(n, n) = weight(k, n);
    return w;
}

ComplexMatrix TripleSpec::inverse_weight_matrix(std::size_t k) const {
    check_order(*this, k);
    ComplexMatrix w(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) w(n, n) = 1.0 / weight(k, n);
    return w;
}

Complex pairing(const DVector& f, const DualVector& big_f) {
    check_dim(f.coords.size(), big_f.coords.size());
    Complex acc{};
    for (std::size_t n = 0; n < f.coords.size(); ++n) acc += f.coords[n] * std::conj(big_f.coords[n]);
    return acc;
}

Complex pairing(const DualVector& big_f, const DVector& f) { return std::conj(pairing(f, big_f)); }

double seminorm(const TripleSpec& spec, std::size_t k, const DVector& f) {
    check_order(spec, k);
    check_dim(spec.dim, f.coords.size());
    std::vector<Complex> weighted(f.coords.size());
    for (std::size_t n = 0; n < f.coords.size(); ++n) weighted[n] = spec.weight(k, n) * f.coords[n];
    return euclidean_norm(weighted);
}

double dual_seminorm(const TripleSpec& spec, const BoundedSet& m, const DualVector& big_f) {
    check_order(spec, m.order);
    check_dim(spec.dim, big_f.coords.size());
    if (!(m.radius > 0.0)) throw ValidationError("bounded set radius must be positive");
    std::vector<Complex> weighted(big_f.coords.size());
    for (std::size_t n = 0; n < big_f.coords.size(); ++n) weighted[n] = big_f.coords[n] / spec.weight(m.order, n);
    return m.radius * euclidean_norm(weighted);
}

std::vector<double> decay_profile(const TripleSpec& spec, const DVector& f) {
    std::vector<double> out;
    out.reserve(spec.max_order + 1);
    for (std::size_t k = 0; k <= spec.max_order; ++k) out.push_back(seminorm(spec, k, f));
    return out;
}

} // namespace rigged
