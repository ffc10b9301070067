#include "wrightmi/gamma_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wrightmi {

bool is_nonpositive_integer(double x) {
    if (x > 0.5)
        return false;
    const double r = std::nearbyint(x);
    return r <= 0.0 && std::abs(x - r) <= pole_threshold;
}

static std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw pole_error("gamma: pole at x=" + fmt(x));
    const double g = std::tgamma(x);
    if (!std::isfinite(g))
        throw overflow_error("gamma: |Gamma(x)| overflows double range at x=" + fmt(x));
    return g;
}

SignedLogGamma log_gamma_signed(double x) {
    if (is_nonpositive_integer(x))
        throw pole_error("log_gamma_signed: pole at x=" + fmt(x));
    int sign = 0;
    const double la = ::lgamma_r(x, &sign);
    return {la, sign < 0 ? -1 : 1};
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x))
        return 0.0;
    const SignedLogGamma slg = log_gamma_signed(x);
    return slg.sign * std::exp(-slg.log_abs);
}

// Asymptotic tail of psi for large x: ln x - 1/(2x) - sum B_2n/(2n x^2n).
static double digamma_asymptotic(double x) {
    const double inv = 1.0 / x;
    const double v = inv * inv;
    const double tail =
        v * (1.0 / 12 -
        v * (1.0 / 120 -
        v * (1.0 / 252 -
        v * (1.0 / 240 -
        v * (1.0 / 132 -
        v * (691.0 / 32760 -
        v * (1.0 / 12)))))));
    return std::log(x) - 0.5 * inv - tail;
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw pole_error("digamma: pole at x=" + fmt(x));
    if (x < 0.5) {
        // reflection: psi(x) = psi(1-x) - pi*cot(pi*x)
        return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
    }
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    return shift + digamma_asymptotic(x);
}

} // namespace wrightmi
