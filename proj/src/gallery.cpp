#include "rigged/gallery.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rigged/errors.hpp"

namespace rigged {

SampledMap make_onb(std::size_t d, std::size_t max_order) {
    if (d == 0) throw BadParams("onb needs d >= 1");
    return SampledMap(ComplexMatrix::identity(d), make_counting(d), TripleSpec(d, max_order));
}

SampledMap make_fourier_continuous(std::size_t d, std::size_t n, std::size_t max_order) {
    if (d == 0) throw BadParams("fourier needs d >= 1");
    if (n < 2 * d + 2) throw BadParams("fourier needs N >= 2d + 2");
    MeasureSpace ms = make_uniform(0.0, 2.0 * std::numbers::pi, n, true);
    ComplexMatrix table(n, d);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = ms.nodes()[i];
        for (std::size_t k = 0; k < d; ++k) {
            // Functional coordinates e^{i(k+1)x}/sqrt(2 pi); the table holds their conjugates.
            table(i, k) = norm * std::polar(1.0, -static_cast<double>(k + 1) * x);
        }
    }
    return SampledMap(std::move(table), std::move(ms), TripleSpec(d, max_order));
}

std::vector<double> hermite_functions(std::size_t count, double x) {
    std::vector<double> h(count);
    if (count == 0) return h;
    h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (count > 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (std::size_t n = 1; n + 1 < count; ++n) {
        const double nd = static_cast<double>(n);
        h[n + 1] = x * std::sqrt(2.0 / (nd + 1.0)) * h[n] - std::sqrt(nd / (nd + 1.0)) * h[n - 1];
    }
    return h;
}

std::vector<double> hermite_function_derivatives(std::size_t count, double x) {
    const std::vector<double> h = hermite_functions(count + 1, x);
    std::vector<double> dh(count);
    for (std::size_t n = 0; n < count; ++n) {
        const double nd = static_cast<double>(n);
        const double down = n == 0 ? 0.0 : std::sqrt(nd / 2.0) * h[n - 1];
        dh[n] = down - std::sqrt((nd + 1.0) / 2.0) * h[n + 1];
    }
    return dh;
}

double default_hermite_half_width(std::size_t d) { return 6.0 + std::sqrt(2.0 * static_cast<double>(d)); }

SampledMap make_delta_prime_hermite(std::size_t d, std::size_t n, double half_width, std::size_t max_order) {
    if (d < 2) throw BadParams("delta_prime needs d >= 2");
    if (n < 16) throw BadParams("delta_prime needs N >= 16");
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw BadParams("delta_prime needs L > 0");
    MeasureSpace ms = make_uniform(-half_width, half_width, n, false);
    ComplexMatrix table(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double> dh = hermite_function_derivatives(d, ms.nodes()[i]);
        for (std::size_t k = 0; k < d; ++k) table(i, k) = -dh[k];
    }
    return SampledMap(std::move(table), std::move(ms), TripleSpec(d, max_order));
}

SampledMap make_perturbed_riesz(std::size_t d, double eps, std::uint64_t seed, std::size_t max_order) {
    if (d == 0) throw BadParams("perturbed_riesz needs d >= 1");
    if (!(eps >= 0.0) || !(eps < 1.0)) throw BadParams("perturbed_riesz needs 0 <= eps < 1");
    if (eps == 0.0) return make_onb(d, max_order);

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ComplexMatrix e(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            double re = 0.0;
            double im = 0.0;
            do {
                re = unit(gen);
                im = unit(gen);
            } while (re * re + im * im > 1.0);
            e(i, j) = Complex{re, im};
        }
    }
    const double spectral = svd(e).singular_values.front();
    ComplexMatrix table = ComplexMatrix::identity(d) + Complex{eps / spectral, 0.0} * e;
    return SampledMap(std::move(table), make_counting(d), TripleSpec(d, max_order));
}

SampledMap make_non_total(std::size_t d, std::size_t max_order) {
    if (d < 2) throw BadParams("non_total needs d >= 2");
    ComplexMatrix table(d - 1, d);
    for (std::size_t i = 0; i + 1 < d; ++i) table(i, i) = 1.0;
    return SampledMap(std::move(table), make_counting(d - 1), TripleSpec(d, max_order));
}

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names{"onb", "fourier", "delta_prime", "perturbed_riesz", "non_total"};
    return names;
}

namespace {

std::size_t as_count(const std::map<std::string, double>& p, const std::string& key) {
    const double v = p.at(key);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) throw BadParams("parameter " + key + " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

// Two copies of a counting-measure system on orthogonal coordinate blocks.
SampledMap direct_sum(const SampledMap& m) {
    const std::size_t n = m.node_count();
    const std::size_t d = m.dim();
    ComplexMatrix table(2 * n, 2 * d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            table(i, j) = m.table()(i, j);
            table(n + i, d + j) = m.table()(i, j);
        }
    }
    return SampledMap(std::move(table), make_counting(2 * n), TripleSpec(2 * d, m.triple().max_order));
}

std::map<std::string, double> resolve(const GallerySpec& spec, std::map<std::string, double> defaults) {
    for (const auto& [key, value] : spec.params) {
        if (!defaults.contains(key)) throw BadParams("gallery '" + spec.name + "' has no parameter '" + key + "'");
        if (!std::isfinite(value)) throw BadParams("parameter " + key + " must be finite");
        defaults[key] = value;
    }
    return defaults;
}

} // namespace

GallerySystem make_gallery(const GallerySpec& spec) {
    const auto k = static_cast<double>(kDefaultGalleryOrder);
    if (spec.name == "onb") {
        auto p = resolve(spec, {{"d", 2}, {"K", k}});
        const std::size_t d = as_count(p, "d");
        const std::size_t order = as_count(p, "K");
        return {{spec.name, p}, make_onb(d, order), make_onb(2 * d, order)};
    }
    if (spec.name == "fourier") {
        auto p = resolve(spec, {{"d", 4}, {"N", 32}, {"K", k}});
        const std::size_t d = as_count(p, "d");
        const std::size_t n = as_count(p, "N");
        const std::size_t order = as_count(p, "K");
        SampledMap map = make_fourier_continuous(d, n, order);
        return {{spec.name, p}, std::move(map), make_fourier_continuous(2 * d, std::max(n, 4 * d + 2), order)};
    }
    if (spec.name == "delta_prime") {
        const bool explicit_width = spec.params.contains("L");
        auto p = resolve(spec, {{"d", 4}, {"N", 128}, {"L", 0.0}, {"K", k}});
        const std::size_t d = as_count(p, "d");
        if (!explicit_width) p["L"] = default_hermite_half_width(d);
        const std::size_t n = as_count(p, "N");
        const std::size_t order = as_count(p, "K");
        SampledMap map = make_delta_prime_hermite(d, n, p["L"], order);
        return {{spec.name, p}, std::move(map), make_delta_prime_hermite(2 * d, n, p["L"], order)};
    }
    if (spec.name == "perturbed_riesz") {
        auto p = resolve(spec, {{"d", 4}, {"eps", 0.5}, {"seed", 0}, {"K", k}});
        const std::size_t d = as_count(p, "d");
        const auto seed = static_cast<std::uint64_t>(as_count(p, "seed"));
        const std::size_t order = as_count(p, "K");
        SampledMap map = make_perturbed_riesz(d, p["eps"], seed, order);
        SampledMap companion = direct_sum(map);
        return {{spec.name, p}, std::move(map), std::move(companion)};
    }
    if (spec.name == "non_total") {
        auto p = resolve(spec, {{"d", 2}, {"K", k}});
        const std::size_t d = as_count(p, "d");
        const std::size_t order = as_count(p, "K");
        return {{spec.name, p}, make_non_total(d, order), make_non_total(2 * d, order)};
    }
    throw BadParams("unknown gallery '" + spec.name + "'");
}

} // namespace rigged
