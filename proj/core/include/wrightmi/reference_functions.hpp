#pragma once

#include <vector>

#include "wrightmi/errors.hpp"

namespace wrightmi {

// Classical special functions by direct term summation. These are oracles
// for the identity suites: each has its own truncation logic and shares
// nothing with the series evaluator except the gamma kernel. All cap at 300
// terms and throw convergence_error instead of extrapolating.

// Indices mu_1..mu_d of the d-index Bessel generalization.
struct HyperBesselIndices {
    std::vector<double> mu;
};

// sum_k z^k / (k! Gamma(lambda k + mu)); requires lambda > 0.
double wright(double lambda, double mu, double z);

// sum_k z^k / Gamma(alpha k + beta); direct summation needs |z| <= 5.
double mittag_leffler(double alpha, double beta, double z);

// sum_k z^k / prod_j Gamma(alpha_j k + beta_j); |z| <= 5.
double multi_index_mittag_leffler(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, double z);

// sum_k (-1)^k z^k / (k! prod_j Gamma(k + mu_j + 1)); |z| <= 10.
double hyper_bessel(const HyperBesselIndices& idx, double z);

// sum_m (x/2)^{2m+order} / (m! Gamma(m + order + 1)); order > -1, x >= 0.
double bessel_i(double order, double x);

// (x/2)^{order+1} sum_m (x/2)^{2m} / (Gamma(m+3/2) Gamma(m+order+3/2));
// order >= 0, x >= 0.
double struve_l(double order, double x);

// C_nu(x) = sum_m x^m / (m! Gamma(m + nu + 1)) = x^{-nu/2} I_nu(2 sqrt x),
// the normalization with C_nu(0) = 1/Gamma(nu+1) that satisfies
// x C_{nu+2}(x) + (nu+1) C_{nu+1}(x) = C_nu(x); order > -1, x >= 0.
double bessel_clifford(double order, double x);

// C_{mu,nu}(x) = sum_k (-x)^k / (k! Gamma(k+mu+1) Gamma(k+nu+1));
// mu, nu > -1.
double bessel_clifford_third(double mu, double nu, double x);

} // namespace wrightmi
