#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/reference_functions.hpp"

using namespace wrightmi;

namespace {
// mpmath, 50 digits
constexpr double bessel_i0_2 = 2.2795853023360673;
constexpr double bessel_i1_2 = 1.5906368546373291;

double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}
} // namespace

TEST_CASE("modified Bessel frozen values and small arguments") {
    CHECK(bessel_i(0, 2.0) == doctest::Approx(bessel_i0_2).epsilon(1e-13));
    CHECK(bessel_i(1, 2.0) == doctest::Approx(bessel_i1_2).epsilon(1e-13));
    CHECK(bessel_i(0, 0.0) == 1.0);
    CHECK(bessel_i(1, 0.0) == 0.0);
    CHECK(bessel_i(2.5, 0.0) == 0.0);
}

TEST_CASE("wright function basics") {
    CHECK(wright(0.5, 1.0, 0.0) == 1.0);
    // W_{1,1}(x) = I_0(2 sqrt x)
    for (double x : {0.25, 1.0, 2.0})
        CHECK(wright(1.0, 1.0, x) == doctest::Approx(bessel_i(0, 2 * std::sqrt(x))).epsilon(1e-13));
    // W_{1,2}(x) = I_1(2 sqrt x)/sqrt(x)
    for (double x : {0.25, 1.0, 2.0})
        CHECK(wright(1.0, 2.0, x) ==
              doctest::Approx(bessel_i(1, 2 * std::sqrt(x)) / std::sqrt(x)).epsilon(1e-13));
    CHECK_THROWS_AS(wright(0.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(wright(-0.5, 1.0, 1.0), domain_error);
}

TEST_CASE("mittag-leffler reduces to elementary functions") {
    for (double z : {-1.0, 0.5, 2.0}) {
        CHECK(mittag_leffler(1.0, 1.0, z) == doctest::Approx(std::exp(z)).epsilon(1e-13));
        CHECK(mittag_leffler(2.0, 1.0, z * z) == doctest::Approx(std::cosh(z)).epsilon(1e-13));
        CHECK(mittag_leffler(1.0, 2.0, z) ==
              doctest::Approx((std::exp(z) - 1.0) / z).epsilon(1e-13));
    }
    CHECK(mittag_leffler(0.7, 1.3, 0.0) == doctest::Approx(reciprocal_gamma(1.3)));
    CHECK_THROWS_AS(mittag_leffler(0.5, 1.0, 6.0), domain_error); // radius guard
}

TEST_CASE("multi-index mittag-leffler collapses to the two-parameter case") {
    std::mt19937_64 rng(81);
    for (int i = 0; i < 50; ++i) {
        const double a = uniform(rng, 0.3, 2.0);
        const double b = uniform(rng, 0.3, 2.0);
        const double z = uniform(rng, -4.0, 4.0);
        CHECK(multi_index_mittag_leffler({a}, {b}, z) ==
              doctest::Approx(mittag_leffler(a, b, z)).epsilon(1e-13));
    }
    // two equal index pairs at (1,1) square the factorials: sum z^k / (k!)^2 = I_0(2 sqrt z)
    for (double z : {0.3, 1.0, 3.0})
        CHECK(multi_index_mittag_leffler({1.0, 1.0}, {1.0, 1.0}, z) ==
              doctest::Approx(bessel_i(0, 2 * std::sqrt(z))).epsilon(1e-13));
}

TEST_CASE("hyper-bessel with one index is a rescaled Bessel function") {
    // sum (-z)^k / (k! Gamma(k+nu+1)) = z^{-nu/2} J_nu(2 sqrt z) for z > 0
    for (double z : {0.25, 1.0, 4.0}) {
        const HyperBesselIndices idx{{0.0}};
        const double want = std::cyl_bessel_j(0.0, 2 * std::sqrt(z));
        CHECK(hyper_bessel(idx, z) == doctest::Approx(want).epsilon(1e-12));
    }
    for (double z : {0.25, 1.0, 4.0}) {
        const HyperBesselIndices idx{{1.0}};
        const double want = std::cyl_bessel_j(1.0, 2 * std::sqrt(z)) / std::sqrt(z);
        CHECK(hyper_bessel(idx, z) == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK_THROWS_AS(hyper_bessel(HyperBesselIndices{{1.0}}, 20.0), domain_error);
}

TEST_CASE("modified Struve closed form at half order") {
    // L_{1/2}(x) = sqrt(2/(pi x)) (cosh x - 1)
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        const double want = std::sqrt(2.0 / (M_PI * x)) * (std::cosh(x) - 1.0);
        CHECK(struve_l(0.5, x) == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(struve_l(0.0, 0.0) == 0.0);
}

TEST_CASE("bessel-clifford second kind ties to the modified Bessel function") {
    std::mt19937_64 rng(82);
    for (int i = 0; i < 40; ++i) {
        const double nu = uniform(rng, -0.5, 3.0);
        const double x = uniform(rng, 0.05, 4.0);
        const double want = std::pow(x, -nu / 2.0) * bessel_i(nu, 2 * std::sqrt(x));
        CHECK(bessel_clifford(nu, x) == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(bessel_clifford(1.5, 0.0) == doctest::Approx(reciprocal_gamma(2.5)));
}

TEST_CASE("bessel-clifford third kind equals the two-index hyper-bessel series") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 40; ++i) {
        const double mu = uniform(rng, 0.0, 2.5);
        const double nu = uniform(rng, 0.0, 2.5);
        const double x = uniform(rng, 0.05, 4.0);
        CHECK(bessel_clifford_third(mu, nu, x) ==
              doctest::Approx(hyper_bessel(HyperBesselIndices{{mu, nu}}, x)).epsilon(1e-12));
    }
}

TEST_CASE("radius guards reject arguments past the contract") {
    CHECK_THROWS_AS(multi_index_mittag_leffler({0.5, 0.5}, {1.0, 1.0}, 5.5), domain_error);
    CHECK_THROWS_AS(mittag_leffler(0.9, 1.0, -5.5), domain_error);
}
