#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "wrightmi/analysis.hpp"
#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/params.hpp"

using namespace wrightmi;

namespace {
const std::vector<double> grid10 = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

TEST_CASE("laplace series: zero rate gives the constant term transform") {
    // integrand is the constant 1/Gamma(b_top); transform 1/(s Gamma(b_top))
    const MultiIndexParams p = ThreeParams(0.5, 0.5, 0.5).to_multi_index();
    for (double s : {1.0, 2.0, 5.0}) {
        const SeriesValue v = laplace_series_multi(p, 0.0, s);
        CHECK(v.converged);
        CHECK(v.value == doctest::Approx(reciprocal_gamma(1.0) / s).epsilon(1e-14));
    }
}

TEST_CASE("laplace series: exponential case sums the geometric transform") {
    // function is e^x, transform at lambda=1 is 1/(s-1)
    const MultiIndexParams p = ThreeParams(0.0, 1.0, 0.0).to_multi_index();
    const SeriesValue v = laplace_series_multi(p, 1.0, 2.0);
    CHECK(v.converged);
    CHECK(v.value == doctest::Approx(1.0).epsilon(1e-13));
    const double q = laplace_quadrature(p, 1.0, 2.0, 1.0);
    CHECK(q == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("laplace series vs quadrature on a Bessel-type case") {
    // W_{1,1,1}(x) = I_0(2 sqrt x); int e^{-sx} I_0(2 sqrt x) dx = e^{1/s}/s
    const MultiIndexParams p = ThreeParams(1.0, 1.0, 1.0).to_multi_index();
    for (double s : {2.0, 3.0}) {
        const SeriesValue v = laplace_series_multi(p, 1.0, s);
        CHECK(v.converged);
        const double want = std::exp(1.0 / s) / s;
        CHECK(v.value == doctest::Approx(want).epsilon(1e-12));
        CHECK(laplace_quadrature(p, 1.0, s, 1.0) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("laplace series reports divergence past the radius") {
    const MultiIndexParams p = ThreeParams(0.0, 0.5, 1.0).to_multi_index();
    const SeriesValue v = laplace_series_multi(p, 1.0, 0.5);
    CHECK_FALSE(v.converged);
}

TEST_CASE("laplace three-param check separates the printed and corrected forms") {
    const ThreeParams p(0.5, 0.5, 0.5);
    const std::vector<double> s_grid = {2.0, 3.0, 5.0};
    const ThreeParamLaplaceCheck chk = laplace_three_param_check(p, 1.0, 0.5, s_grid);
    REQUIRE(chk.candidate.size() == 3);
    REQUIRE(chk.reference.size() == 3);
    REQUIRE(chk.candidate_vs_reference.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(chk.reference[i].abs_diff <= 1e-8);   // corrected form matches quadrature
        CHECK(chk.candidate[i].abs_diff > 1e-2);    // beta-weighted form does not
        CHECK(chk.candidate_vs_reference[i] ==
              doctest::Approx(std::fabs(chk.candidate[i].series_value -
                                        chk.reference[i].series_value)));
    }
    CHECK(chk.max_candidate_vs_reference > 1e-2);
}

TEST_CASE("laplace argument validation") {
    const MultiIndexParams p = ThreeParams(0.5, 0.5, 0.5).to_multi_index();
    CHECK_THROWS_AS(laplace_series_multi(p, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(laplace_series_multi(p, 1.0, -2.0), domain_error);
    CHECK_THROWS_AS(laplace_quadrature(p, 1.0, 2.0, 0.0), domain_error);
    // rho = 2 makes the integrand grow like exp(c x^2), past any e^{-sx}
    CHECK_THROWS_AS(laplace_quadrature(p, 1.0, 1.0, 2.0), convergence_error);
}

TEST_CASE("main recurrence residual is bounded by the dropped term") {
    const ThreeParams p(0.5, 0.5, 1.25);
    const ResidualReport r = recurrence_residual_main(p, grid10, 40);
    CHECK(r.pass);
    CHECK(r.max_abs_residual <= 1e-8);
    const ResidualReport r2 = recurrence_residual_main(p, grid10, 50);
    CHECK(r2.max_abs_residual <= r.max_abs_residual);

    CHECK_THROWS_AS(recurrence_residual_main(p, {0.5, 1.5}, 40), domain_error);
    CHECK_THROWS_AS(recurrence_residual_main(p, grid10, 1), domain_error);
}

TEST_CASE("bessel-clifford three-term relation on the oracle") {
    const ResidualReport r0 = recurrence_residual_bessel_clifford(0, {1.0});
    CHECK(r0.pass);
    CHECK(r0.max_abs_residual <= 1e-10);
    const ResidualReport r3 = recurrence_residual_bessel_clifford(3, {2.0});
    CHECK(r3.pass);
    CHECK(r3.max_abs_residual <= 1e-10);
    CHECK_THROWS_AS(recurrence_residual_bessel_clifford(-1, {1.0}), domain_error);
}

TEST_CASE("mittag-leffler three-term form leaves the predicted boundary term") {
    const double alpha = 0.5, beta = 1.5;
    const int K = 50;
    const ResidualReport three =
        recurrence_residual_mittag_leffler(alpha, beta, grid10, K);
    CHECK_FALSE(three.pass); // the printed combination is not an identity
    // residual at z equals z^{beta-1}/Gamma(beta-alpha) up to truncation
    const ResidualReport gap =
        mittag_leffler_recurrence_leftover_gap(alpha, beta, grid10, K);
    CHECK(gap.pass);
    CHECK(gap.max_abs_residual <= 1e-10);
    // and the two-term fractional identity holds to rounding
    const ResidualReport two =
        mittag_leffler_recurrence_two_term(alpha, beta, grid10, K);
    CHECK(two.pass);
    CHECK(two.max_abs_residual <= 1e-8);
    // sanity: the measured residual really is order z^{beta-1}/Gamma(beta-alpha)
    CHECK(three.max_abs_residual ==
          doctest::Approx(reciprocal_gamma(beta - alpha)).epsilon(1e-6));

    CHECK_THROWS_AS(recurrence_residual_mittag_leffler(0.0, 1.5, grid10, K), domain_error);
    CHECK_THROWS_AS(recurrence_residual_mittag_leffler(0.5, 0.5, grid10, K), domain_error);
}

TEST_CASE("wright shift relations hold termwise") {
    const WrightRecurrenceReports r = recurrence_residual_wright(0.5, 1.5, grid10, 40);
    CHECK(r.fractional.pass);
    CHECK(r.fractional.max_abs_residual <= 1e-8);
    CHECK(r.first_derivative.pass);
    CHECK(r.first_derivative.max_abs_residual <= 1e-8);

    CHECK_THROWS_AS(recurrence_residual_wright(1.0, 1.5, grid10, 40), domain_error);
    CHECK_THROWS_AS(recurrence_residual_wright(0.5, 0.4, grid10, 40), domain_error);
}

TEST_CASE("parameter derivatives at z=0 collapse to digamma values") {
    const ThreeParams p(0.3, 0.8, 1.1);
    const double g0 = 1.0 - 0.3 + 1.1;
    const double want = digamma(g0) * reciprocal_gamma(g0);
    CHECK(param_derivative(p, ParamTag::nu, 0.0).value ==
          doctest::Approx(-want).epsilon(1e-13));
    CHECK(param_derivative(p, ParamTag::alpha, 0.0).value ==
          doctest::Approx(want).epsilon(1e-13));
    CHECK(param_derivative(p, ParamTag::beta, 0.0).value == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("parameter derivatives match central finite differences") {
    const ResidualReport r =
        param_derivative_fd_check(ThreeParams(0.5, 0.5, 1.0), ParamTag::nu, 0.5, 1e-5);
    CHECK(r.pass);
    CHECK(r.max_abs_residual <= 1e-6);
    const ResidualReport ra =
        param_derivative_fd_check(ThreeParams(0.4, 0.9, 0.7), ParamTag::alpha, -0.5, 1e-5);
    CHECK(ra.pass);
    const ResidualReport rb =
        param_derivative_fd_check(ThreeParams(0.4, 0.9, 0.7), ParamTag::beta, 0.8, 1e-5);
    CHECK(rb.pass);

    CHECK_THROWS_AS(
        param_derivative_fd_check(ThreeParams(0.5, 0.5, 1.0), ParamTag::nu, 0.5, 1e-3),
        domain_error);
    // alpha step across the envelope boundary reports the perturbed domain
    try {
        param_derivative_fd_check(ThreeParams(0.0, 0.5, 1.0), ParamTag::alpha, 0.5, 1e-5);
        CHECK(false);
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("perturbed") != std::string::npos);
    }
}

TEST_CASE("parameter derivative pole reporting names the term") {
    // g_k = 0.4k - 1.2 first lands on a non-positive integer (0) at k=3
    try {
        param_derivative(ThreeParams(0.9, 0.4, -1.3), ParamTag::nu, 0.5);
        CHECK(false);
    } catch (const pole_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("k = 3") != std::string::npos);
    }
    // numerator argument 0.2k - 0.6 first lands on 0 at k=3
    try {
        param_derivative(ThreeParams(1.6, 0.2, 3.0), ParamTag::alpha, 0.5);
        CHECK(false);
    } catch (const pole_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("j = 3") != std::string::npos);
    }
}
