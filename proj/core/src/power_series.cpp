#include "wrightmi/power_series.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/series.hpp"

namespace wrightmi {

double GeneralizedPowerSeries::evaluate(double x) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0.0)
            sum += coeffs[k] * std::pow(x, exponent(k));
    }
    return sum;
}

static void check_exponents(const GeneralizedPowerSeries& s, const char* who) {
    if (!(s.step > 0.0))
        throw domain_error(std::string(who) + ": step must be > 0");
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (s.coeffs[k] != 0.0 && !(s.exponent(k) > -1.0))
            throw domain_error(std::string(who) + ": exponent " +
                               std::to_string(s.exponent(k)) + " at term " +
                               std::to_string(k) + " is not > -1");
    }
}

GeneralizedPowerSeries make_gps(double offset, double step, std::vector<double> coeffs) {
    GeneralizedPowerSeries s{offset, step, std::move(coeffs)};
    check_exponents(s, "make_gps");
    return s;
}

// Gamma(d+1)/Gamma(d+c+1) with both arguments > 0.
static double gamma_ratio(double d, double c) {
    const SignedLogGamma num = log_gamma_signed(d + 1.0);
    const SignedLogGamma den = log_gamma_signed(d + c + 1.0);
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

GeneralizedPowerSeries rl_integral(const GeneralizedPowerSeries& s, double gamma) {
    if (!(gamma >= 0.0))
        throw domain_error("rl_integral: order must be >= 0");
    check_exponents(s, "rl_integral");
    if (gamma == 0.0)
        return s;
    GeneralizedPowerSeries out{s.offset + gamma, s.step, s.coeffs};
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        if (out.coeffs[k] != 0.0)
            out.coeffs[k] *= gamma_ratio(s.exponent(k), gamma);
    }
    return out;
}

GeneralizedPowerSeries caputo_derivative(const GeneralizedPowerSeries& s, double gamma) {
    if (!(gamma > 0.0) || !(gamma <= 1.0))
        throw domain_error("caputo_derivative: order must be in (0,1]");
    if (!(s.step > 0.0))
        throw domain_error("caputo_derivative: step must be > 0");
    GeneralizedPowerSeries out{s.offset - gamma, s.step, s.coeffs};
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        if (out.coeffs[k] == 0.0)
            continue;
        const double d = s.exponent(k);
        if (std::abs(d) <= pole_threshold) {
            out.coeffs[k] = 0.0; // constant term: annihilated
        } else if (d > 0.0) {
            out.coeffs[k] *= gamma_ratio(d, -gamma);
        } else {
            throw domain_error("caputo_derivative: exponent " + std::to_string(d) +
                               " at term " + std::to_string(k) +
                               " is outside the admissible {0} U (0,inf)");
        }
    }
    return out;
}

GeneralizedPowerSeries multiply_power(const GeneralizedPowerSeries& s, double p) {
    GeneralizedPowerSeries out{s.offset + p, s.step, s.coeffs};
    check_exponents(out, "multiply_power");
    return out;
}

GeneralizedPowerSeries apply_hyper_bessel_operator(const MultiIndexParams& params,
                                                   const GeneralizedPowerSeries& series) {
    const std::size_t n = params.n();
    for (std::size_t j = 0; j <= n; ++j) {
        if (!(params.alphas[j] > 0.0) || !(params.alphas[j] <= 1.0))
            throw domain_error("apply_hyper_bessel_operator: alpha_" + std::to_string(j + 1) +
                               " must be in (0,1]");
    }
    GeneralizedPowerSeries s = series;
    double power_balance = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        try {
            s = caputo_derivative(s, params.alphas[j]);
            s = multiply_power(s, params.nus[j]);
        } catch (const domain_error& e) {
            throw domain_error("apply_hyper_bessel_operator: stage " + std::to_string(j + 1) +
                               ": " + e.what());
        }
        power_balance += params.alphas[j] - params.nus[j];
    }
    try {
        s = caputo_derivative(s, params.alphas[n]);
        s = multiply_power(s, power_balance);
    } catch (const domain_error& e) {
        throw domain_error("apply_hyper_bessel_operator: stage " + std::to_string(n + 1) +
                           ": " + e.what());
    }
    return s;
}

ResidualReport eigen_residual(const MultiIndexParams& params, double lambda, int K,
                              const std::vector<double>& grid) {
    if (K < 1)
        throw domain_error("eigen_residual: K must be >= 1");
    for (double x : grid)
        if (!(x > 0.0) || !(x <= 1.0))
            throw domain_error("eigen_residual: grid points must lie in (0,1]");

    const double at = params.alpha_top();
    CoefficientStream stream(params);
    GeneralizedPowerSeries trunc{0.0, at, {}};
    trunc.coeffs.reserve(K);
    double lk = 1.0;
    for (int k = 0; k < K; ++k) {
        trunc.coeffs.push_back(stream.next_value() * lk);
        lk *= lambda;
    }
    // |lambda * last kept term| bounds the residual on (0,1]
    const double analytic_bound = std::abs(lambda * trunc.coeffs.back());

    const GeneralizedPowerSeries applied = apply_hyper_bessel_operator(params, trunc);

    ResidualReport rep;
    rep.identity_id = "eigenfunction-property";
    rep.grid = grid;
    double scale = 1.0;
    for (double x : grid) {
        const double want = lambda * trunc.evaluate(x);
        const double got = applied.evaluate(x);
        const double r = std::abs(got - want);
        rep.max_abs_residual = std::max(rep.max_abs_residual, r);
        scale = std::max(scale, std::abs(want));
        if (want != 0.0)
            rep.max_rel_residual = std::max(rep.max_rel_residual, r / std::abs(want));
    }
    rep.tolerance = analytic_bound * (1.0 + 1e-6) + 1e-12 * scale;
    rep.pass = rep.max_abs_residual <= rep.tolerance;
    return rep;
}

} // namespace wrightmi
