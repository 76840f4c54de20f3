#include "rigged/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

std::string_view to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::counting: return "counting";
    case MeasureKind::trapezoid_periodic: return "trapezoid-periodic";
    case MeasureKind::simpson: return "simpson";
    case MeasureKind::custom: return "custom";
    }
    return "custom";
}

MeasureKind measure_kind_from_string(std::string_view name) {
    for (auto k : {MeasureKind::counting, MeasureKind::trapezoid_periodic, MeasureKind::simpson, MeasureKind::custom})
        if (to_string(k) == name) return k;
    throw ValidationError("unknown measure kind '" + std::string(name) + "'");
}

MeasureSpace::MeasureSpace(std::vector<double> nodes, std::vector<double> weights, MeasureKind kind)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), kind_(kind) {
    if (nodes_.empty()) throw ValidationError("measure space needs at least one node");
    if (nodes_.size() != weights_.size()) throw DimMismatch("node and weight counts differ");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]) || !std::isfinite(weights_[i]))
            throw ValidationError("non-finite node or weight at index " + std::to_string(i));
        if (!(weights_[i] > 0.0)) throw ValidationError("nonpositive weight at index " + std::to_string(i));
        if (i > 0 && !(nodes_[i] > nodes_[i - 1]))
            throw ValidationError("nodes are not strictly increasing at index " + std::to_string(i));
    }
    if (kind_ == MeasureKind::counting &&
        std::any_of(weights_.begin(), weights_.end(), [](double w) { return w != 1.0; }))
        throw ValidationError("counting measure requires unit weights");
}

MeasureSpace make_counting(std::size_t n) {
    if (n == 0) throw BadParams("counting measure needs N >= 1");
    std::vector<double> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<double>(i);
    return MeasureSpace(std::move(nodes), std::vector<double>(n, 1.0), MeasureKind::counting);
}

MeasureSpace make_uniform(double a, double b, std::size_t n, bool periodic) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw BadInterval("interval requires finite a < b");
    if (periodic) {
        if (n < 2) throw BadInterval("periodic grid needs N >= 2");
        const double h = (b - a) / static_cast<double>(n);
        std::vector<double> nodes(n);
        for (std::size_t i = 0; i < n; ++i) nodes[i] = a + h * static_cast<double>(i);
        return MeasureSpace(std::move(nodes), std::vector<double>(n, h), MeasureKind::trapezoid_periodic);
    }
    if (n < 3) throw BadInterval("Simpson grid needs N >= 3");
    const std::size_t intervals = n - 1;
    const double h = (b - a) / static_cast<double>(intervals);
    std::vector<double> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = a + h * static_cast<double>(i);
    nodes.back() = b;

    std::vector<double> w(n, 0.0);
    // Simpson panels over an even number of intervals, 3/8 panel for the rest.
    const std::size_t simpson_intervals = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= simpson_intervals; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (simpson_intervals != intervals) {
        const std::size_t s = simpson_intervals;
        w[s] += 3.0 * h / 8.0;
        w[s + 1] += 9.0 * h / 8.0;
        w[s + 2] += 9.0 * h / 8.0;
        w[s + 3] += 3.0 * h / 8.0;
    }
    return MeasureSpace(std::move(nodes), std::move(w), MeasureKind::simpson);
}

double integrate(const MeasureSpace& ms, std::span<const double> values) {
    if (values.size() != ms.size()) throw DimMismatch("integrand length does not match node count");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * ms.weights()[i];
    return acc;
}

Complex integrate(const MeasureSpace& ms, std::span<const Complex> values) {
    if (values.size() != ms.size()) throw DimMismatch("integrand length does not match node count");
    Complex acc{};
    for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * ms.weights()[i];
    return acc;
}

Complex l2_inner(const MeasureSpace& ms, const L2Function& xi, const L2Function& eta) {
    if (xi.values.size() != ms.size() || eta.values.size() != ms.size())
        throw DimMismatch("function length does not match node count");
    Complex acc{};
    for (std::size_t i = 0; i < ms.size(); ++i) acc += xi.values[i] * std::conj(eta.values[i]) * ms.weights()[i];
    return acc;
}

double l2_norm(const MeasureSpace& ms, const L2Function& xi) {
    if (xi.values.size() != ms.size()) throw DimMismatch("function length does not match node count");
    std::vector<Complex> scaled(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) scaled[i] = xi.values[i] * std::sqrt(ms.weights()[i]);
    return euclidean_norm(scaled);
}

} // namespace rigged
