#pragma once

#include <cstddef>
#include <vector>

#include "wrightmi/errors.hpp"

namespace wrightmi {

// Parameter vectors (alpha_1..alpha_{n+1}; nu_1..nu_n) together with the
// derived sequences
//   a_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_m)
//   b_j = 1 + sum_{m=1..j} (nu_{m-1} - alpha_{m-1})
// with alpha_0 = nu_0 = 0, so that a_j = b_j - alpha_j and b_1 = 1 exactly.
//
// alpha_{n+1} must be positive (it sets the series step); the leading
// alpha_j may be zero, which turns the corresponding gamma ratio into an
// exact 1 (this is how the Mittag-Leffler family embeds).
struct MultiIndexParams {
    std::vector<double> alphas; // alpha_1 .. alpha_{n+1}
    std::vector<double> nus;    // nu_1 .. nu_n
    std::vector<double> a;      // a_1 .. a_{n+1}
    std::vector<double> b;      // b_1 .. b_{n+1}

    static MultiIndexParams make(std::vector<double> alphas, std::vector<double> nus);

    std::size_t n() const { return nus.size(); }
    double alpha_top() const { return alphas.back(); } // alpha_{n+1}
    double b_top() const { return b.back(); }          // b_{n+1}
};

// The n=1 specialization W_{alpha,beta,nu}: coefficients
//   c_k = prod_{i=1..k} Gamma(beta i + 1 - alpha)/Gamma(beta i + 1)
//         / Gamma(beta k + 1 - alpha + nu).
// alpha = 0 and alpha = 1 are the Mittag-Leffler and Wright boundaries and
// are accepted; the fractional-operator paths impose their own (0,1] checks.
struct ThreeParams {
    double alpha;
    double beta;
    double nu;

    ThreeParams(double alpha_, double beta_, double nu_);

    MultiIndexParams to_multi_index() const;
};

} // namespace wrightmi
