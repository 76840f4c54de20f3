#pragma once

// Small hand-built systems shared by the unit and acceptance suites.

#include <random>

#include "oracle.hpp"
#include "rigged/wmap.hpp"

namespace fixtures {

using rigged::Complex;
using rigged::ComplexMatrix;
using rigged::SampledMap;

inline SampledMap counting_map(ComplexMatrix table, std::size_t max_order = 1) {
    const std::size_t n = table.rows();
    const std::size_t d = table.cols();
    return SampledMap(std::move(table), rigged::make_counting(n), rigged::TripleSpec(d, max_order));
}

/// Rows f_1 = (1, 0), f_2 = (1, 1): S = [[2, 1], [1, 1]], G = [[1, 1], [1, 2]].
inline SampledMap two_rows() { return counting_map(ComplexMatrix{{1, 0}, {1, 1}}); }

/// The same row (1, 2) at two nodes of equal weight.
inline SampledMap duplicated_rows() { return counting_map(ComplexMatrix{{1, 2}, {1, 2}}); }

/// The single row (1, 0) in C^2.
inline SampledMap single_row() { return counting_map(ComplexMatrix{{1, 0}}); }

/// Random N x d system over random positive weights.
inline SampledMap random_map(std::size_t n, std::size_t d, std::mt19937_64& gen, std::size_t max_order = 2) {
    std::uniform_real_distribution<double> w(0.2, 2.0);
    std::vector<double> nodes(n), weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = static_cast<double>(i);
        weights[i] = w(gen);
    }
    return SampledMap(oracle::random_matrix(n, d, gen),
                      rigged::MeasureSpace(std::move(nodes), std::move(weights), rigged::MeasureKind::custom),
                      rigged::TripleSpec(d, max_order));
}

/// Same measure and triple, new table.
inline SampledMap with_table(const SampledMap& m, ComplexMatrix table) {
    return SampledMap(std::move(table), m.measure(), m.triple());
}

/// sqrt(mu) T, computed independently of the library operators.
inline ComplexMatrix weighted(const SampledMap& m) {
    ComplexMatrix b = m.table();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (auto& z : b.row(i)) z *= std::sqrt(m.measure().weights()[i]);
    return b;
}

} // namespace fixtures
