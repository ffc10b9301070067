#include "wrightmi/params.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace wrightmi {

MultiIndexParams MultiIndexParams::make(std::vector<double> alphas, std::vector<double> nus) {
    if (nus.empty())
        throw domain_error("MultiIndexParams: need at least one nu (n >= 1)");
    if (alphas.size() != nus.size() + 1)
        throw domain_error("MultiIndexParams: need n+1 alphas for n nus, got " +
                           std::to_string(alphas.size()) + " alphas and " +
                           std::to_string(nus.size()) + " nus");
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (!std::isfinite(alphas[j]) || alphas[j] < 0.0)
            throw domain_error("MultiIndexParams: alpha_" + std::to_string(j + 1) +
                               " must be finite and >= 0");
    }
    if (alphas.back() <= 0.0)
        throw domain_error("MultiIndexParams: alpha_{n+1} must be > 0");
    for (std::size_t j = 0; j < nus.size(); ++j) {
        if (!std::isfinite(nus[j]))
            throw domain_error("MultiIndexParams: nu_" + std::to_string(j + 1) +
                               " must be finite");
    }

    MultiIndexParams p;
    p.alphas = std::move(alphas);
    p.nus = std::move(nus);
    const std::size_t n = p.nus.size();
    p.a.resize(n + 1);
    p.b.resize(n + 1);
    // Cumulative sums with alpha_0 = nu_0 = 0; a_j = b_j - alpha_j holds by
    // construction since the two partial sums differ by exactly alpha_j.
    double bj = 1.0; // b_1 = 1 + (nu_0 - alpha_0)
    p.b[0] = bj;
    p.a[0] = bj - p.alphas[0];
    for (std::size_t j = 1; j <= n; ++j) {
        bj += p.nus[j - 1] - p.alphas[j - 1];
        p.b[j] = bj;
        p.a[j] = bj - p.alphas[j];
    }
    return p;
}

ThreeParams::ThreeParams(double alpha_, double beta_, double nu_)
    : alpha(alpha_), beta(beta_), nu(nu_) {
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw domain_error("ThreeParams: alpha must be finite and >= 0");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw domain_error("ThreeParams: beta must be finite and > 0");
    if (!std::isfinite(nu))
        throw domain_error("ThreeParams: nu must be finite");
}

MultiIndexParams ThreeParams::to_multi_index() const {
    return MultiIndexParams::make({alpha, beta}, {nu});
}

} // namespace wrightmi
