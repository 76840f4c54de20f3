#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rigged/linalg.hpp"

namespace rigged {

enum class MeasureKind { counting, trapezoid_periodic, simpson, custom };

std::string_view to_string(MeasureKind kind);
/// Throws ValidationError on an unknown name.
MeasureKind measure_kind_from_string(std::string_view name);

/// Discretized (X, mu): strictly increasing nodes with positive weights.
class MeasureSpace {
public:
    MeasureSpace(std::vector<double> nodes, std::vector<double> weights, MeasureKind kind);

    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    MeasureKind kind() const noexcept { return kind_; }

    bool operator==(const MeasureSpace&) const = default;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    MeasureKind kind_;
};

/// Point values xi(x_i) of a function in L^2(X, mu).
struct L2Function {
    std::vector<Complex> values;
};

/// Nodes 0..N-1, unit weights.
MeasureSpace make_counting(std::size_t n);

/// periodic: equal trapezoid weights (b - a) / N on [a, b).
/// otherwise: composite Simpson on [a, b] with N nodes. An even node count
/// closes the last three intervals with the 3/8 rule.
MeasureSpace make_uniform(double a, double b, std::size_t n, bool periodic);

double integrate(const MeasureSpace& ms, std::span<const double> values);
Complex integrate(const MeasureSpace& ms, std::span<const Complex> values);

/// sum_i xi_i conj(eta_i) mu_i.
Complex l2_inner(const MeasureSpace& ms, const L2Function& xi, const L2Function& eta);
double l2_norm(const MeasureSpace& ms, const L2Function& xi);

} // namespace rigged
