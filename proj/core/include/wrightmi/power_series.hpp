#pragma once

#include <vector>

#include "wrightmi/params.hpp"
#include "wrightmi/report.hpp"

namespace wrightmi {

// Finite sum_k c_k x^(offset + step*k). The carrier on which the fractional
// operators act exactly, term by term. Every term with a nonzero
// coefficient must keep its exponent > -1 (the validity domain of the
// power-law rules); slots holding an exact 0 are inert and exempt, which is
// what a Caputo-annihilated constant leaves behind.
struct GeneralizedPowerSeries {
    double offset = 0.0;
    double step = 1.0;
    std::vector<double> coeffs;

    double exponent(std::size_t k) const { return offset + step * k; }
    double evaluate(double x) const;
};

// Validates step > 0 and the exponent floor for nonzero coefficients.
GeneralizedPowerSeries make_gps(double offset, double step, std::vector<double> coeffs);

// J^gamma, termwise x^d -> Gamma(d+1)/Gamma(d+gamma+1) x^{d+gamma}.
// gamma = 0 is the identity.
GeneralizedPowerSeries rl_integral(const GeneralizedPowerSeries& s, double gamma);

// Caputo D^gamma for gamma in (0,1], termwise
// x^d -> Gamma(d+1)/Gamma(d-gamma+1) x^{d-gamma} for d > 0; terms with
// exponent exactly 0 are annihilated (constants); nonzero terms with
// d in (-1,0) are rejected. gamma = 1 is the classical derivative.
GeneralizedPowerSeries caputo_derivative(const GeneralizedPowerSeries& s, double gamma);

// x^p * s: shifts the offset, coefficients untouched.
GeneralizedPowerSeries multiply_power(const GeneralizedPowerSeries& s, double p);

// The composed operator
//   x^{sum_s (alpha_s - nu_s)} D^{alpha_{n+1}} x^{nu_n} D^{alpha_n} ... x^{nu_1} D^{alpha_1}
// applied right to left. Requires every alpha_j in (0,1]; stage-level
// exponent violations are rethrown with the stage identified.
GeneralizedPowerSeries apply_hyper_bessel_operator(const MultiIndexParams& params,
                                                   const GeneralizedPowerSeries& series);

// Builds the K-term truncation of W(lambda x^{alpha_{n+1}}) as a power
// series in x, applies the operator, subtracts lambda * (the same
// truncation), and reports the max absolute residual over grid (points in
// (0,1]). Term by term the operator maps term k to lambda * term_{k-1}, so
// the residual is exactly the dropped boundary term lambda^K c_{K-1}
// x^{alpha_{n+1} (K-1)}; the report's tolerance field carries that analytic
// bound (plus a rounding floor).
ResidualReport eigen_residual(const MultiIndexParams& params, double lambda, int K,
                              const std::vector<double>& grid);

} // namespace wrightmi
