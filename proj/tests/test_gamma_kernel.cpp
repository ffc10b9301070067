#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"

using namespace wrightmi;

namespace {
// mpmath, 50 digits, rounded to double
constexpr double gamma_half = 1.7724538509055160273;   // sqrt(pi)
constexpr double psi_one = -0.57721566490153286061;    // -EulerGamma
constexpr double psi_half = -1.9635100260214234794;    // -EulerGamma - 2 ln 2

double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}
} // namespace

TEST_CASE("gamma matches frozen values and factorials") {
    CHECK(wrightmi::gamma(0.5) == doctest::Approx(gamma_half).epsilon(1e-15));
    CHECK(wrightmi::gamma(1.0) == 1.0);
    CHECK(wrightmi::gamma(2.0) == 1.0);
    CHECK(wrightmi::gamma(5.0) == 24.0);
    CHECK(wrightmi::gamma(-0.5) == doctest::Approx(-2.0 * gamma_half).epsilon(1e-14));
}

TEST_CASE("gamma throws at poles and on overflow") {
    CHECK_THROWS_AS(wrightmi::gamma(0.0), pole_error);
    CHECK_THROWS_AS(wrightmi::gamma(-3.0), pole_error);
    CHECK_THROWS_AS(wrightmi::gamma(-7.0 + 1e-13), pole_error); // inside the pole window
    CHECK_THROWS_AS(wrightmi::gamma(200.0), overflow_error);
}

TEST_CASE("log_gamma_signed tracks the recurrence Gamma(x+1) = x Gamma(x)") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 1000; ++i) {
        double x = uniform(rng, -8.0, 8.0);
        if (is_nonpositive_integer(x) || is_nonpositive_integer(x + 1.0) ||
            std::fabs(x) < 1e-3)
            continue;
        const SignedLogGamma a = log_gamma_signed(x);
        const SignedLogGamma b = log_gamma_signed(x + 1.0);
        CHECK(b.log_abs ==
              doctest::Approx(a.log_abs + std::log(std::fabs(x))).epsilon(1e-12));
        CHECK(b.sign == (x > 0 ? a.sign : -a.sign));
    }
}

TEST_CASE("log_gamma_signed obeys the reflection identity") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 200; ++i) {
        const double x = uniform(rng, 0.05, 0.95);
        const SignedLogGamma a = log_gamma_signed(x);
        const SignedLogGamma b = log_gamma_signed(1.0 - x);
        const double lhs = a.log_abs + b.log_abs;
        const double rhs = std::log(M_PI / std::sin(M_PI * x));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(a.sign * b.sign == 1);
    }
}

TEST_CASE("log_gamma_signed sign alternates between negative integers") {
    CHECK(log_gamma_signed(-0.5).sign == -1);
    CHECK(log_gamma_signed(-1.5).sign == 1);
    CHECK(log_gamma_signed(-2.5).sign == -1);
    CHECK(log_gamma_signed(0.5).sign == 1);
    CHECK(log_gamma_signed(3.7).sign == 1);
}

TEST_CASE("log_gamma_signed stays finite far out") {
    const SignedLogGamma g = log_gamma_signed(1e6);
    CHECK(std::isfinite(g.log_abs));
    CHECK(g.sign == 1);
    // Stirling cross-check: log Gamma(x) ~ x log x - x - 0.5 log(x/(2 pi))
    const double stirling = 1e6 * std::log(1e6) - 1e6 - 0.5 * std::log(1e6 / (2 * M_PI));
    CHECK(g.log_abs == doctest::Approx(stirling).epsilon(1e-10));
}

TEST_CASE("reciprocal_gamma is zero exactly at the poles and 1/Gamma elsewhere") {
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-25.0) == 0.0);
    CHECK(reciprocal_gamma(1.0) == 1.0);
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / gamma_half).epsilon(1e-14));
    CHECK(reciprocal_gamma(-0.5) == doctest::Approx(-0.5 / gamma_half).epsilon(1e-14));
}

TEST_CASE("digamma matches frozen values") {
    CHECK(digamma(1.0) == doctest::Approx(psi_one).epsilon(1e-13));
    CHECK(digamma(0.5) == doctest::Approx(psi_half).epsilon(1e-13));
    CHECK(digamma(2.0) == doctest::Approx(psi_one + 1.0).epsilon(1e-13));
    CHECK_THROWS_AS(digamma(0.0), pole_error);
    CHECK_THROWS_AS(digamma(-4.0), pole_error);
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x on 1000 draws") {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 1000; ++i) {
        const double x = uniform(rng, 0.01, 20.0);
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-11));
    }
}

TEST_CASE("digamma reflection psi(1-x) - psi(x) = pi cot(pi x)") {
    std::mt19937_64 rng(64);
    for (int i = 0; i < 200; ++i) {
        const double x = uniform(rng, 0.05, 0.95);
        if (std::fabs(x - 0.5) < 1e-3) continue; // cot blows through zero
        const double lhs = digamma(1.0 - x) - digamma(x);
        const double rhs = M_PI / std::tan(M_PI * x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("digamma agrees with a log-gamma central difference") {
    // keeps the shift/asymptotic route honest against the libm-backed log gamma
    std::mt19937_64 rng(65);
    for (int i = 0; i < 100; ++i) {
        const double x = uniform(rng, 0.2, 30.0);
        const double h = 1e-6;
        const double fd =
            (log_gamma_signed(x + h).log_abs - log_gamma_signed(x - h).log_abs) / (2 * h);
        CHECK(digamma(x) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("is_nonpositive_integer uses the documented pole window") {
    CHECK(is_nonpositive_integer(0.0));
    CHECK(is_nonpositive_integer(-2.0));
    CHECK(is_nonpositive_integer(-2.0 + 1e-13));
    CHECK_FALSE(is_nonpositive_integer(-2.0 + 1e-9));
    CHECK_FALSE(is_nonpositive_integer(1.0));
    CHECK_FALSE(is_nonpositive_integer(0.5));
}
