#pragma once

#include <vector>

#include "wrightmi/params.hpp"
#include "wrightmi/report.hpp"
#include "wrightmi/series.hpp"

namespace wrightmi {

// ---- Laplace transform of W(lambda x^rho) against a quadrature oracle ----

// Transformed series (1/s) sum_k c_k Gamma(a' k + 1) (lambda / s^{a'})^k
// with a' = alpha_{n+1} and c_k the W coefficients: the termwise transform
// of W(lambda x^{a'}). No closed convergence region is assumed; term growth
// over 10 consecutive indices stops the sum with converged=false, and a
// non-converged value is never presented as converged.
SeriesValue laplace_series_multi(const MultiIndexParams& params, double lambda, double s,
                                 double tolerance = default_tolerance,
                                 int max_terms = default_max_terms);

// integral_0^inf e^{-s x} W(lambda x^rho) dx by tanh-sinh quadrature on
// [0, X], where X is pushed out until an exponential majorant bounds the
// dropped tail below 1e-13; absolute error target 1e-10. Throws
// convergence_error if the integrand is not yet decaying by X_max.
double laplace_quadrature(const MultiIndexParams& params, double lambda, double s,
                          double rho);

// Three-way check of the n=1 transform of W_{alpha,beta,nu}(lambda x^rho).
// candidate: the closed form carrying a beta factor inside the coefficient
// product, as commonly stated. reference: the specialization of the general
// transformed series (no beta factor; identical to laplace_series_multi
// when rho = beta). Both are compared against the quadrature oracle per s;
// the candidate's status is for the verifier to judge (pass or
// erratum-candidate), never forced.
struct ThreeParamLaplaceCheck {
    std::vector<LaplaceComparison> candidate;
    std::vector<LaplaceComparison> reference;
    std::vector<double> candidate_vs_reference; // per s, |candidate - reference|
    double max_candidate_vs_reference = 0.0;
};
ThreeParamLaplaceCheck laplace_three_param_check(const ThreeParams& p, double lambda,
                                                 double rho,
                                                 const std::vector<double>& s_grid);

// ---- Recurrence relations as grid residuals ----

// x^{alpha+beta} D^beta [x^{nu-alpha+beta} W_{alpha,beta,nu+beta}(x^beta)]
//   - 2 x^{nu+beta} W_{alpha,beta,nu}(x^beta)
//   + x^{alpha+nu} D^alpha [W_{alpha,beta,nu-beta}(x^beta)]
// on K-term truncations. Termwise the three members cancel exactly and the
// residual is the single dropped boundary term, whose magnitude is attached
// as the report tolerance. Needs alpha, beta in (0,1] (Caputo orders) and
// nu + beta - alpha > 0 (first member's leading exponent).
ResidualReport recurrence_residual_main(const ThreeParams& p,
                                        const std::vector<double>& x_grid, int K);

// x C_{n+2}(x) + (n+1) C_{n+1}(x) - C_n(x) via the reference
// Bessel-Clifford series only.
ResidualReport recurrence_residual_bessel_clifford(int n,
                                                   const std::vector<double>& x_grid);

// The three-term form
//   z^a D^a [z^{a+b-1} E_{a,a+b}(z^a)] - 2 z^{a+b-1} E_{a,b}(z^a)
//     + z^{b-1} E_{a,b-a}(z^a)
// evaluated faithfully. Termwise algebra says this equals
// z^{b-1}/Gamma(b-a) (the k=0 term of the third member survives; nothing
// annihilates it), so away from b-a on non-positive integers the residual
// does not vanish with K. The pass gate uses `tolerance` as given so the
// verifier can report the outcome honestly.
ResidualReport recurrence_residual_mittag_leffler(double alpha, double beta,
                                                  const std::vector<double>& z_grid, int K,
                                                  double tolerance = 1e-8);

// Evidence check: |three-term residual - z^{beta-1}/Gamma(beta-alpha)| on
// the grid, which is pure truncation tail if the leftover law holds.
ResidualReport mittag_leffler_recurrence_leftover_gap(double alpha, double beta,
                                                      const std::vector<double>& z_grid,
                                                      int K);

// The exact two-term identity
//   z^a D^a [z^{a+b-1} E_{a,a+b}(z^a)] = z^{a+b-1} E_{a,b}(z^a).
ResidualReport mittag_leffler_recurrence_two_term(double alpha, double beta,
                                                  const std::vector<double>& z_grid, int K);

// D^l [z^{l+nu-1} W_{l,l+nu}(z^l/l)] = z^{nu-1} W_{l,nu}(z^l/l)  (fractional,
// l in (0,1), l+nu > 1) and d/dz W_{l,nu-l}(z^l/l) = z^{l-1} W_{l,nu}(z^l/l)
// (first derivative). Both are exact termwise.
struct WrightRecurrenceReports {
    ResidualReport fractional;
    ResidualReport first_derivative;
};
WrightRecurrenceReports recurrence_residual_wright(double lambda, double nu,
                                                   const std::vector<double>& z_grid,
                                                   int K);

// ---- Parameter derivatives (digamma series) ----

enum class ParamTag { alpha, beta, nu };

// Partial sum of the digamma-weighted series for d/d(which) of
// W_{alpha,beta,nu}(z), with g_k = beta k + 1 - alpha + nu and
// P_k = prod_{i<=k} Gamma(beta i+1-alpha)/Gamma(beta i+1):
//   nu:    -sum_k P_k psi(g_k)/Gamma(g_k) z^k
//   beta:   sum_k P_k [sum_{j<=k} j(psi(beta j+1-alpha)-psi(beta j+1))
//                      - k psi(g_k)] / Gamma(g_k) z^k
//   alpha:  sum_k P_k [-sum_{j<=k} psi(beta j+1-alpha) + psi(g_k)]
//                      / Gamma(g_k) z^k
// Inner digamma sums are carried incrementally in k (linear cost). A pole
// in any psi/gamma argument up to the truncation index throws with the
// offending (k, j) named.
SeriesValue param_derivative(const ThreeParams& p, ParamTag which, double z,
                             double tolerance = default_tolerance,
                             int max_terms = default_max_terms);

// Central difference (W(p+h e_which) - W(p-h e_which)) / (2h) against
// param_derivative; h must lie in [1e-6, 1e-4] and both perturbed parameter
// sets must stay in the valid domain. Report tolerance scales as O(h^2).
ResidualReport param_derivative_fd_check(const ThreeParams& p, ParamTag which, double z,
                                         double h);

} // namespace wrightmi
