#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/params.hpp"
#include "wrightmi/reference_functions.hpp"
#include "wrightmi/series.hpp"

using namespace wrightmi;

namespace {
constexpr double e_const = 2.718281828459045235;

double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

double eval3(double a, double b, double n, double z) {
    return eval_three_param(ThreeParams(a, b, n), z, 1e-15, 400).value;
}
} // namespace

TEST_CASE("exponential anchor at (0,1,0)") {
    CHECK(eval3(0, 1, 0, 1.0) == doctest::Approx(e_const).epsilon(1e-14));
    for (double x : {0.5, 1.0, 2.0, -1.0})
        CHECK(eval3(0, 1, 0, x) == doctest::Approx(std::exp(x)).epsilon(1e-13));
}

TEST_CASE("integer-shift closed form at (0,1,n)") {
    // e^x/x^n - sum_{i<n} x^{i-n}/i!
    for (int n : {1, 2, 3}) {
        for (double x : {0.5, 1.0, 2.0}) {
            double want = std::exp(x) / std::pow(x, n);
            double fact = 1.0;
            for (int i = 0; i < n; ++i) {
                if (i > 0) fact *= i;
                want -= std::pow(x, i - n) / fact;
            }
            CHECK(eval3(0, 1, n, x) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("value at z=0 is the reciprocal gamma of the leading index") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        const double a = uniform(rng, 0.0, 1.0);
        const double b = uniform(rng, 0.3, 2.0);
        const double n = uniform(rng, -0.5, 2.0);
        CHECK(eval3(a, b, n, 0.0) ==
              doctest::Approx(reciprocal_gamma(1.0 - a + n)).epsilon(1e-13));
    }
    // vanishing leading coefficient: 1/Gamma(0) = 0
    CHECK(eval3(1, 1, 0, 0.0) == 0.0);
}

TEST_CASE("Bessel rows of the closed-form table") {
    for (double x : {0.25, 1.0, 2.25}) {
        const double sx = std::sqrt(x);
        CHECK(eval3(1, 1, 0, x) == doctest::Approx(sx * bessel_i(1, 2 * sx)).epsilon(1e-13));
        CHECK(eval3(1, 1, 1, x) == doctest::Approx(bessel_i(0, 2 * sx)).epsilon(1e-13));
    }
    for (double nu : {2.0, 2.5}) {
        for (double x : {0.5, 1.5}) {
            const double want =
                std::pow(x, -(nu - 1.0) / 2.0) * bessel_i(nu - 1.0, 2 * std::sqrt(x));
            CHECK(eval3(1, 1, nu, x) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("Struve rows of the closed-form table") {
    // (1/2,1/2,1/2) evaluated at sqrt(x): I_0 + L_0 at 2 sqrt(x)
    for (double x : {0.5, 1.0, 2.0}) {
        const double sx = std::sqrt(x);
        const double want = bessel_i(0, 2 * sx) + struve_l(0, 2 * sx);
        CHECK(eval3(0.5, 0.5, 0.5, sx) == doctest::Approx(want).epsilon(1e-12));
    }
    // The companion row needs a 1/sqrt(x) prefactor to hold on the whole
    // axis; the prefactor-free form crosses it only at x=1.
    for (double x : {0.5, 1.0, 2.0}) {
        const double sx = std::sqrt(x);
        const double corrected = (bessel_i(1, 2 * sx) + struve_l(1, 2 * sx)) / sx;
        CHECK(eval3(0.5, 0.5, 1.5, sx) == doctest::Approx(corrected).epsilon(1e-12));
    }
    const double at_two = eval3(0.5, 0.5, 1.5, std::sqrt(2.0));
    const double unprefixed = bessel_i(1, 2 * std::sqrt(2.0)) + struve_l(1, 2 * std::sqrt(2.0));
    CHECK(std::fabs(at_two - unprefixed) > 1e-3);
    const double at_one = eval3(0.5, 0.5, 1.5, 1.0);
    CHECK(at_one == doctest::Approx(bessel_i(1, 2.0) + struve_l(1, 2.0)).epsilon(1e-12));
}

TEST_CASE("hyperbolic rows of the closed-form table") {
    for (double x : {0.5, 1.0, 2.0}) {
        const double sx = std::sqrt(x);
        const double row7 =
            (std::sinh(2 * sx) + std::cosh(2 * sx) - 1.0) / std::sqrt(M_PI * x);
        CHECK(eval3(0.5, 0.5, 1.0, sx) == doctest::Approx(row7).epsilon(1e-12));
        const double row8 = ((2 * sx - 1.0) * std::exp(2 * sx) - 2 * x + 1.0) /
                            (2 * x * std::sqrt(M_PI * x));
        CHECK(eval3(0.5, 0.5, 2.0, sx) == doctest::Approx(row8).epsilon(1e-12));
    }
}

TEST_CASE("second-order Bessel-Clifford cross-check") {
    for (double nu : {-0.5, 0.0, 1.0, 2.5}) {
        for (double x : {0.3, 1.0, 2.0}) {
            CHECK(eval3(1, 1, nu + 1, x) ==
                  doctest::Approx(bessel_clifford(nu, x)).epsilon(1e-13));
        }
    }
}

TEST_CASE("coefficient stream agrees with direct gamma-ratio products") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + (trial % 2);
        std::vector<double> alphas, nus;
        for (int j = 0; j < n + 1; ++j) alphas.push_back(uniform(rng, 0.2, 1.0));
        for (int j = 0; j < n; ++j) nus.push_back(uniform(rng, 0.2, 1.8));
        const MultiIndexParams p = MultiIndexParams::make(alphas, nus);
        CoefficientStream stream(p);
        const double at = p.alpha_top();
        double prod = 1.0;
        for (int k = 0; k <= 20; ++k) {
            if (k > 0)
                for (std::size_t j = 0; j < p.a.size() - 1; ++j)
                    prod *= wrightmi::gamma(at * k + p.a[j]) / wrightmi::gamma(at * k + p.b[j]);
            const double direct = prod * reciprocal_gamma(at * k + p.b_top());
            const Coefficient c = stream.next();
            CHECK(c.value() == doctest::Approx(direct).epsilon(1e-11));
        }
    }
}

TEST_CASE("coefficient stream reports numerator poles with indices") {
    // numerator argument beta*i + 1 - alpha lands on 0 at i=1
    const MultiIndexParams p = ThreeParams(1.5, 0.5, 0.0).to_multi_index();
    CoefficientStream stream(p);
    stream.next(); // k=0 fine
    try {
        stream.next();
        CHECK(false);
    } catch (const pole_error& e) {
        CHECK(std::string(e.what()).find("i=1") != std::string::npos);
        CHECK(std::string(e.what()).find("j=1") != std::string::npos);
    }
}

TEST_CASE("vanishing denominators zero out the tail instead of throwing") {
    // b_1 is always 1, so pick b_2 = 1 + nu - alpha on a non-positive integer:
    // here every coefficient with k >= 1 carries Gamma(k + b_... ) fine, but
    // the final index 1 - alpha + nu = 0 kills only the k=0 term.
    const double v = eval3(1, 1, 0, 0.0);
    CHECK(v == 0.0);
    const SeriesValue s = eval_three_param(ThreeParams(1, 1, 0), 0.5, 1e-15, 400);
    CHECK(s.converged);
    CHECK(s.value > 0.0); // k >= 1 terms survive
}

TEST_CASE("series flags non-convergence at the term cap") {
    const SeriesValue s =
        eval_multi_index(ThreeParams(0.5, 0.5, 1.0).to_multi_index(), -30.0, 1e-15, 40);
    CHECK_FALSE(s.converged);
    CHECK(s.terms_used == 40);
}

TEST_CASE("negative arguments alternate and stay finite") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 20; ++i) {
        const double z = uniform(rng, -3.0, 0.0);
        const SeriesValue s = eval_three_param(ThreeParams(0.5, 1.0, 1.0), z, 1e-15, 400);
        CHECK(s.converged);
        CHECK(std::isfinite(s.value));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(eval3(0.5, 0.5, 0.5, std::nan("")), domain_error);
    CHECK_THROWS_AS(eval_three_param(ThreeParams(0.5, 0.5, 0.5), 1.0, 0.0, 100),
                    domain_error);
    CHECK_THROWS_AS(eval_three_param(ThreeParams(0.5, 0.5, 0.5), 1.0, 1e-14, 0),
                    domain_error);
    CHECK_THROWS_AS(ThreeParams(-0.1, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(ThreeParams(0.5, 0.0, 0.0), domain_error);
    CHECK_THROWS_AS(MultiIndexParams::make({1.0}, {}), domain_error);
    CHECK_THROWS_AS(MultiIndexParams::make({1.0, 1.0}, {1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(MultiIndexParams::make({1.0, 0.0}, {1.0}), domain_error);
}

TEST_CASE("three-param conversion matches the general evaluator") {
    std::mt19937_64 rng(74);
    for (int i = 0; i < 30; ++i) {
        const double a = uniform(rng, 0.0, 1.0);
        const double b = uniform(rng, 0.3, 1.5);
        const double n = uniform(rng, 0.0, 2.0);
        const double z = uniform(rng, -2.0, 2.0);
        const MultiIndexParams p = ThreeParams(a, b, n).to_multi_index();
        CHECK(p.n() == 1);
        CHECK(eval_multi_index(p, z, 1e-15, 400).value ==
              eval_three_param(ThreeParams(a, b, n), z, 1e-15, 400).value);
    }
}
