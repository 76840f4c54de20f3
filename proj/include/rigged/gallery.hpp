#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigged/wmap.hpp"

namespace rigged {

inline constexpr std::size_t kDefaultGalleryOrder = 2;

/// Orthonormal basis over the counting measure.
SampledMap make_onb(std::size_t d, std::size_t max_order = kDefaultGalleryOrder);

/// omega_x = (e^{ix}, ..., e^{idx}) / sqrt(2 pi) on the periodic grid over
/// [0, 2 pi); a continuous tight frame with bound 1. Requires N >= 2d + 2.
SampledMap make_fourier_continuous(std::size_t d, std::size_t n, std::size_t max_order = kDefaultGalleryOrder);

/// Derivatives of Dirac deltas, <f, delta'_x> = -f'(x), in the Hermite
/// function coordinates of S c L^2(R) c S^x, sampled on a Simpson grid over
/// [-L, L]. Requires d >= 2, N >= 16, L > 0.
SampledMap make_delta_prime_hermite(std::size_t d, std::size_t n, double half_width,
                                    std::size_t max_order = kDefaultGalleryOrder);
double default_hermite_half_width(std::size_t d);

/// I + eps E over the counting measure with E seeded, entries in the unit
/// disk, normalized to spectral norm 1. Requires 0 <= eps < 1.
SampledMap make_perturbed_riesz(std::size_t d, double eps, std::uint64_t seed,
                                std::size_t max_order = kDefaultGalleryOrder);

/// The first d - 1 unit coordinates; e_{d-1} annihilates every row.
SampledMap make_non_total(std::size_t d, std::size_t max_order = kDefaultGalleryOrder);

/// Orthonormal Hermite functions h_0 .. h_{count-1} at x.
std::vector<double> hermite_functions(std::size_t count, double x);
/// h_0' .. h_{count-1}' at x from h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}.
std::vector<double> hermite_function_derivatives(std::size_t count, double x);

struct GallerySpec {
    std::string name;
    std::map<std::string, double> params;
};

struct GallerySystem {
    GallerySpec spec;  // every parameter resolved
    SampledMap map;
    SampledMap companion;  // doubled dimension; perturbed_riesz uses a direct sum of two copies
};

const std::vector<std::string>& gallery_names();

/// Resolves defaults and builds the map plus its doubled-dimension companion.
/// Throws BadParams for an unknown name or parameter.
GallerySystem make_gallery(const GallerySpec& spec);

} // namespace rigged
