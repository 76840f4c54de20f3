#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rigged/errors.hpp"
#include "rigged/gallery.hpp"
#include "rigged/moment.hpp"
#include "rigged/spectra.hpp"

using namespace rigged;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<Complex> weighted_rhs(const SampledMap& m, const L2Function& h) {
    std::vector<Complex> b = h.values;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] *= std::sqrt(m.measure().weights()[i]);
    return b;
}

double distance(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> d(a.begin(), a.end());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return euclidean_norm(d);
}

} // namespace

TEST_CASE("solve_moment examples") {
    const auto onb = solve_moment(make_onb(2), {{1.0, 2.0}});
    CHECK(distance(onb.f.coords, std::vector<Complex>{1.0, 2.0}) <= 1e-14);
    CHECK(onb.residual <= 1e-14);
    CHECK(onb.unique);

    const auto two = solve_moment(fixtures::two_rows(), {{1.0, 2.0}});
    CHECK(distance(two.f.coords, std::vector<Complex>{1.0, 1.0}) <= 1e-13);
    CHECK(two.residual <= 1e-13);

    const auto single = solve_moment(fixtures::single_row(), {{1.0}});
    CHECK(distance(single.f.coords, std::vector<Complex>{1.0, 0.0}) <= 1e-14);
    CHECK_FALSE(single.unique);
    CHECK(single.kernel_dim == 1);
    CHECK(single.decay.size() == 2);

    CHECK_THROWS_AS(solve_moment(make_onb(2), {{1.0}}), DimMismatch);
}

TEST_CASE("solve_moment residual matches the least-squares oracle") {
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + gen() % 8, d = 1 + gen() % 8;
        const SampledMap m = fixtures::random_map(n, d, gen);
        const L2Function h{oracle::random_vector(n, gen)};
        const MomentSolution s = solve_moment(m, h);
        const double ref = oracle::least_squares_residual(fixtures::weighted(m), weighted_rhs(m, h), kDefaultRankTol);
        CHECK(std::abs(s.residual - ref) <= 1e-9 * (1.0 + ref));
        CHECK(s.unique == (s.kernel_dim == 0));
        CHECK(s.unique == is_total(m));
        CHECK(s.rank + s.kernel_dim == d);
    }
}

TEST_CASE("solutions have minimum norm and differ from alternatives by an element of the annihilator") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 2 + gen() % 7, n = 1 + gen() % (d - 1);
        const SampledMap m = fixtures::random_map(n, d, gen);
        const L2Function h{oracle::random_vector(n, gen)};
        const MomentSolution s = solve_moment(m, h);
        REQUIRE(s.kernel_dim == d - n);
        // A kernel element: project a random vector off the row space.
        const SvdResult sv = svd(m.table());
        std::vector<Complex> k(d);
        const auto z = oracle::random_vector(d - n, gen);
        for (std::size_t j = 0; j < d - n; ++j) {
            const auto v = sv.right_vectors.col(n + j);
            for (std::size_t c = 0; c < d; ++c) k[c] += z[j] * v[c];
        }
        DVector alt = s.f;
        for (std::size_t c = 0; c < d; ++c) alt.coords[c] += k[c];
        CHECK(euclidean_norm(alt.coords) >= euclidean_norm(s.f.coords));
        DVector diff{k};
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(pairing(diff, m.functional(i))) <= 1e-10 * (1.0 + euclidean_norm(k)));
        CHECK(l2_norm(m.measure(), analysis(m, alt)) == doctest::Approx(l2_norm(m.measure(), h)).epsilon(1e-9));
    }
}

TEST_CASE("rf_certificate examples") {
    const auto onb = rf_certificate(make_onb(3));
    CHECK(onb.holds);
    CHECK(onb.sigma_min_synthesis == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*onb.witness_radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*onb.max_violation <= 1e-9);

    const auto two = rf_certificate(fixtures::two_rows());
    CHECK(two.holds);
    CHECK(std::abs(two.sigma_min_synthesis - 1.0 / kGolden) <= 1e-12);
    CHECK(std::abs(*two.witness_radius - kGolden) <= 1e-12);
    REQUIRE(two.witness_set);
    CHECK(two.witness_set->order == 0);
    CHECK(two.witness_set->radius == *two.witness_radius);
    CHECK(*two.max_violation <= 1e-9);
    CHECK(two.probes == kDefaultProbes);

    const auto dup = rf_certificate(fixtures::duplicated_rows());
    CHECK_FALSE(dup.holds);
    CHECK(dup.sigma_min_synthesis <= 1e-14);
    CHECK_FALSE(dup.witness_radius);
}

TEST_CASE("rf_certificate is reproducible from its seed") {
    const auto a = rf_certificate(fixtures::two_rows(), kDefaultRankTol, 50, 7);
    const auto b = rf_certificate(fixtures::two_rows(), kDefaultRankTol, 50, 7);
    CHECK(*a.max_violation == *b.max_violation);
    CHECK(seeded_gaussian(5, 3, 1) == seeded_gaussian(5, 3, 1));
    CHECK(seeded_gaussian(5, 3, 1) != seeded_gaussian(5, 3, 2));
    CHECK(seeded_gaussian(5, 3, 1) != seeded_gaussian(5, 4, 1));
}

TEST_CASE("certificate verdict matches the Gram spectrum") {
    std::mt19937_64 gen(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + gen() % 8, d = 1 + gen() % 8;
        const SampledMap m = fixtures::random_map(n, d, gen);
        const RFCertificate c = rf_certificate(m);
        const auto lam = oracle::hermitian_eigenvalues(gram_matrix(m));
        const double lmin = std::max(0.0, lam.front());
        const double smax = c.sigma_max_synthesis;
        CHECK(std::abs(c.sigma_min_synthesis * c.sigma_min_synthesis - lmin) <= 1e-10 * (1.0 + smax * smax));
        CHECK(c.holds == (lmin > std::pow(kDefaultRankTol * smax, 2) && n <= d));
        if (c.holds) CHECK(*c.max_violation <= 1e-9);
    }
}

TEST_CASE("rf_equivalence_check examples") {
    CHECK(rf_equivalence_check(make_onb(3), 20));
    const auto dup = rf_equivalence_report(fixtures::duplicated_rows(), 20);
    CHECK(dup.agrees);
    CHECK_FALSE(dup.certificate_holds);
    CHECK_FALSE(dup.all_solvable);
    CHECK(dup.worst_residual > kDefaultResidualTol);
    const double r = solve_moment(fixtures::duplicated_rows(), {{1.0, -1.0}}).residual;
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("equivalence holds on random and adversarial systems") {
    std::mt19937_64 gen(44);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + gen() % 8, d = 1 + gen() % 8;
        CHECK(rf_equivalence_check(fixtures::random_map(n, d, gen), 20, kDefaultResidualTol, kDefaultRankTol, trial));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 6;
        ComplexMatrix t = oracle::random_matrix(d, d, gen);
        switch (trial % 4) {
        case 0:  // duplicated row
            for (std::size_t c = 0; c < d; ++c) t(1, c) = t(0, c);
            break;
        case 1:  // zero row
            for (auto& z : t.row(d - 1)) z = 0.0;
            break;
        case 2:  // nearly dependent rows, well above the rank threshold
            for (std::size_t c = 0; c < d; ++c) t(1, c) = t(0, c) + 1e-6 * t(1, c);
            break;
        default:  // dependent rows up to roundoff
            for (std::size_t c = 0; c < d; ++c) t(1, c) = t(0, c) * Complex{0.3, 0.4} * (1.0 + 1e-15);
            break;
        }
        CHECK(rf_equivalence_check(fixtures::counting_map(std::move(t)), 20));
    }
}

TEST_CASE("stability_constant examples") {
    const SampledMap onb = make_onb(3);
    CHECK(stability_constant(onb, onb.triple(), 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(stability_constant(fixtures::two_rows(), fixtures::two_rows().triple(), 0) ==
          doctest::Approx(kGolden).epsilon(1e-12));
    const SampledMap twice = fixtures::with_table(onb, Complex{2, 0} * onb.table());
    CHECK(stability_constant(twice, twice.triple(), 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(stability_constant(make_non_total(3), make_non_total(3).triple(), 0), NotTotal);
    CHECK_THROWS_AS(stability_constant(onb, onb.triple(), 3), OrderOutOfRange);
}

TEST_CASE("stability_constant bounds the seminorms tightly") {
    std::mt19937_64 gen(45);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + gen() % 6, n = d + gen() % 4;
        const SampledMap m = fixtures::random_map(n, d, gen);
        for (std::size_t k = 0; k <= m.triple().max_order; ++k) {
            const double c = stability_constant(m, m.triple(), k);
            for (int p = 0; p < 100; ++p) {
                const DVector f{oracle::random_vector(d, gen)};
                CHECK(seminorm(m.triple(), k, f) <= c * l2_norm(m.measure(), analysis(m, f)) + 1e-9);
            }
            // Maximizer: g = pinv(B) u for the top right singular vector u of W_k pinv(B).
            const ComplexMatrix pb = pseudo_inverse(fixtures::weighted(m));
            const SvdResult s = svd(m.triple().weight_matrix(k) * pb);
            const auto u = s.right_vectors.col(0);
            const DVector g{pb * std::span<const Complex>(u)};
            const double ratio = seminorm(m.triple(), k, g) / l2_norm(m.measure(), analysis(m, g));
            CHECK(ratio >= 0.999 * c);
        }
        const double c0 = stability_constant(m, m.triple(), 0);
        const auto sv = oracle::singular_values(fixtures::weighted(m));
        CHECK(std::abs(c0 * sv.back() - 1.0) <= 1e-10);
    }
}

TEST_CASE("dual_reconstruct examples") {
    std::mt19937_64 gen(46);
    const DVector f{oracle::random_vector(3, gen)};
    CHECK(distance(dual_reconstruct(make_onb(3), f).coords, f.coords) <= 1e-14);
    const DVector g{{2.0, 3.0}};
    CHECK(distance(dual_reconstruct(fixtures::two_rows(), g).coords, g.coords) <= 1e-10);
    const SampledMap fourier = make_fourier_continuous(4, 32);
    for (int t = 0; t < 20; ++t) {
        const DVector h{oracle::random_vector(4, gen)};
        CHECK(distance(dual_reconstruct(fourier, h).coords, h.coords) <= 1e-9 * euclidean_norm(h.coords));
    }
    CHECK_THROWS_AS(dual_reconstruct(make_non_total(3), DVector{{1.0, 0.0, 0.0}}), NotAFrame);
}

TEST_CASE("dual_table reproduces vectors through analysis and synthesis") {
    std::mt19937_64 gen(47);
    const SampledMap m = fixtures::random_map(7, 3, gen);
    const SampledMap dual = fixtures::with_table(m, dual_table(m));
    for (int t = 0; t < 10; ++t) {
        const DVector f{oracle::random_vector(3, gen)};
        // sum_i mu_i <f, omega_i> tilde_omega_i = f
        const DualVector back = synthesis(dual, analysis(m, f));
        CHECK(distance(back.coords, f.coords) <= 1e-10 * euclidean_norm(f.coords));
    }
}

TEST_CASE("residuals of near-singular systems sit at the eps * kappa floor") {
    std::mt19937_64 gen(48);
    for (double gap : {1e-5, 1e-7, 1e-9}) {
        ComplexMatrix t = oracle::random_matrix(2, 4, gen);
        for (std::size_t c = 0; c < 4; ++c) t(1, c) = t(0, c) + gap * t(1, c);
        const SampledMap m = fixtures::counting_map(t);
        const auto sv = oracle::singular_values(t);
        const double kappa = sv.front() / sv.back();
        CHECK(rf_certificate(m).holds);
        for (int k = 0; k < 20; ++k) {
            const L2Function h{oracle::random_vector(2, gen)};
            const double floor = std::numeric_limits<double>::epsilon() * kappa * euclidean_norm(h.values);
            CHECK(solve_moment(m, h).residual <= 10.0 * floor);
        }
    }
}

TEST_CASE("the absolute residual threshold depends on the scale of mu") {
    // Three nodes in C^2 are never mu-independent. The unreachable component
    // carries weight 1e-21, so its mu-norm residual drops under 1e-8 until the
    // threshold is scaled with the smallest weight.
    const ComplexMatrix t{{1, 0}, {0, 1}, {1, 1}};
    const SampledMap m(t, MeasureSpace({0, 1, 2}, {1.0, 1.0, 1e-21}, MeasureKind::custom), TripleSpec(2, 0));
    const EquivalenceReport loose = rf_equivalence_report(m, 20, kDefaultResidualTol);
    CHECK_FALSE(loose.certificate_holds);
    CHECK(loose.all_solvable);
    CHECK_FALSE(loose.agrees);
    CHECK(rf_equivalence_check(m, 20, 1e-8 * std::sqrt(1e-21)));
}
