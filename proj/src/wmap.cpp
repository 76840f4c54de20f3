#include "rigged/wmap.hpp"

#include <cmath>
#include <string>

#include "rigged/errors.hpp"

namespace rigged {

SampledMap::SampledMap(ComplexMatrix table, MeasureSpace ms, TripleSpec triple)
    : table_(std::move(table)), ms_(std::move(ms)), triple_(triple) {
    if (table_.rows() != ms_.size()) {
        throw DimMismatch("table has " + std::to_string(table_.rows()) + " rows but the measure has " +
                          std::to_string(ms_.size()) + " nodes");
    }
    if (table_.cols() != triple_.dim) {
        throw DimMismatch("table has " + std::to_string(table_.cols()) + " columns but the triple has dim " +
                          std::to_string(triple_.dim));
    }
    if (!all_finite(table_)) throw ValidationError("table contains non-finite entries");
}

DualVector SampledMap::functional(std::size_t i) const {
    DualVector out{std::vector<Complex>(dim())};
    for (std::size_t n = 0; n < dim(); ++n) out.coords[n] = std::conj(table_(i, n));
    return out;
}

L2Function analysis(const SampledMap& map, const DVector& f) {
    if (f.coords.size() != map.dim()) throw DimMismatch("vector dimension does not match the map");
    L2Function out{std::vector<Complex>(map.node_count())};
    for (std::size_t i = 0; i < map.node_count(); ++i) out.values[i] = pairing(f, map.functional(i));
    return out;
}

DualVector synthesis(const SampledMap& map, const L2Function& xi) {
    if (xi.values.size() != map.node_count()) throw DimMismatch("function length does not match node count");
    return DualVector{synthesis_matrix(map) * std::span<const Complex>(xi.values)};
}

ComplexMatrix analysis_matrix(const SampledMap& map) { return map.table(); }

ComplexMatrix synthesis_matrix(const SampledMap& map) {
    ComplexMatrix s = dagger(map.table());
    const auto& mu = map.measure().weights();
    for (std::size_t n = 0; n < s.rows(); ++n)
        for (std::size_t i = 0; i < s.cols(); ++i) s(n, i) *= mu[i];
    return s;
}

ComplexMatrix weighted_analysis_matrix(const SampledMap& map) {
    ComplexMatrix a = map.table();
    const auto& mu = map.measure().weights();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double r = std::sqrt(mu[i]);
        for (auto& v : a.row(i)) v *= r;
    }
    return a;
}

ComplexMatrix weighted_synthesis_matrix(const SampledMap& map) { return dagger(weighted_analysis_matrix(map)); }

ComplexMatrix frame_matrix(const SampledMap& map) { return synthesis_matrix(map) * analysis_matrix(map); }

ComplexMatrix gram_matrix(const SampledMap& map) {
    const ComplexMatrix b = weighted_analysis_matrix(map);
    return b * dagger(b);
}

namespace {

// Smallest singular value over the full domain (zero when the domain is
// larger than the range) compared against tol * sigma_max.
bool injective(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0)) throw ValidationError("rank tolerance must be positive");
    const SvdResult s = svd(m);
    return numerical_rank(s, tol) == m.cols();
}

} // namespace

bool is_total(const SampledMap& map, double tol) { return injective(weighted_analysis_matrix(map), tol); }

bool is_mu_independent(const SampledMap& map, double tol) {
    return injective(weighted_synthesis_matrix(map), tol);
}

} // namespace rigged
