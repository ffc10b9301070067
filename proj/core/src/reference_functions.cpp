#include "wrightmi/reference_functions.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "wrightmi/gamma_kernel.hpp"

namespace wrightmi {

namespace {

constexpr int oracle_max_terms = 300;
constexpr double oracle_eps = 1e-16;

// Shared accumulation loop: term(k) supplies the full k-th term. Stops once
// three consecutive terms are negligible against the running sum.
template <typename TermFn>
double sum_oracle(const char* name, TermFn term) {
    double sum = 0.0;
    int streak = 0;
    for (int k = 0; k < oracle_max_terms; ++k) {
        const double t = term(k);
        sum += t;
        if (std::abs(t) <= oracle_eps * std::max(1.0, std::abs(sum))) {
            if (++streak >= 3)
                return sum;
        } else {
            streak = 0;
        }
    }
    throw convergence_error(std::string(name) + ": series did not settle within " +
                            std::to_string(oracle_max_terms) + " terms");
}

} // namespace

double wright(double lambda, double mu, double z) {
    if (!(lambda > 0.0))
        throw domain_error("wright: lambda must be > 0");
    double zk_over_kfact = 1.0;
    return sum_oracle("wright", [&](int k) {
        if (k > 0)
            zk_over_kfact *= z / k;
        return zk_over_kfact * reciprocal_gamma(lambda * k + mu);
    });
}

double mittag_leffler(double alpha, double beta, double z) {
    if (!(alpha > 0.0))
        throw domain_error("mittag_leffler: alpha must be > 0");
    if (!(std::abs(z) <= 5.0))
        throw domain_error("mittag_leffler: |z| <= 5 supported, got z=" + std::to_string(z));
    double zk = 1.0;
    return sum_oracle("mittag_leffler", [&](int k) {
        if (k > 0)
            zk *= z;
        return zk * reciprocal_gamma(alpha * k + beta);
    });
}

double multi_index_mittag_leffler(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, double z) {
    if (alphas.empty() || alphas.size() != betas.size())
        throw domain_error("multi_index_mittag_leffler: need matching nonempty index lists");
    for (double a : alphas)
        if (!(a > 0.0))
            throw domain_error("multi_index_mittag_leffler: alphas must be > 0");
    if (!(std::abs(z) <= 5.0))
        throw domain_error("multi_index_mittag_leffler: |z| <= 5 supported");
    double zk = 1.0;
    return sum_oracle("multi_index_mittag_leffler", [&](int k) {
        if (k > 0)
            zk *= z;
        double t = zk;
        for (std::size_t j = 0; j < alphas.size(); ++j)
            t *= reciprocal_gamma(alphas[j] * k + betas[j]);
        return t;
    });
}

double hyper_bessel(const HyperBesselIndices& idx, double z) {
    if (idx.mu.empty())
        throw domain_error("hyper_bessel: need at least one index");
    if (!(std::abs(z) <= 10.0))
        throw domain_error("hyper_bessel: |z| <= 10 supported");
    double mzk_over_kfact = 1.0;
    return sum_oracle("hyper_bessel", [&](int k) {
        if (k > 0)
            mzk_over_kfact *= -z / k;
        double t = mzk_over_kfact;
        for (double m : idx.mu)
            t *= reciprocal_gamma(k + m + 1.0);
        return t;
    });
}

double bessel_i(double order, double x) {
    if (!(order > -1.0))
        throw domain_error("bessel_i: order must be > -1");
    if (!(x >= 0.0))
        throw domain_error("bessel_i: x must be >= 0");
    if (x == 0.0) {
        if (order < 0.0)
            throw domain_error("bessel_i: diverges at x=0 for order < 0");
        return order == 0.0 ? 1.0 : 0.0;
    }
    const double h = 0.5 * x;
    const double pre = std::pow(h, order);
    const double h2 = h * h;
    double h2m_over_mfact = 1.0;
    return sum_oracle("bessel_i", [&](int m) {
        if (m > 0)
            h2m_over_mfact *= h2 / m;
        return pre * h2m_over_mfact * reciprocal_gamma(m + order + 1.0);
    });
}

double struve_l(double order, double x) {
    if (!(order >= 0.0))
        throw domain_error("struve_l: order must be >= 0");
    if (!(x >= 0.0))
        throw domain_error("struve_l: x must be >= 0");
    const double h = 0.5 * x;
    const double pre = std::pow(h, order + 1.0);
    const double h2 = h * h;
    double h2m = 1.0;
    return sum_oracle("struve_l", [&](int m) {
        if (m > 0)
            h2m *= h2;
        return pre * h2m * reciprocal_gamma(m + 1.5) * reciprocal_gamma(m + order + 1.5);
    });
}

double bessel_clifford(double order, double x) {
    if (!(order > -1.0))
        throw domain_error("bessel_clifford: order must be > -1");
    if (!(x >= 0.0))
        throw domain_error("bessel_clifford: x must be >= 0");
    double xm_over_mfact = 1.0;
    return sum_oracle("bessel_clifford", [&](int m) {
        if (m > 0)
            xm_over_mfact *= x / m;
        return xm_over_mfact * reciprocal_gamma(m + order + 1.0);
    });
}

double bessel_clifford_third(double mu, double nu, double x) {
    if (!(mu > -1.0) || !(nu > -1.0))
        throw domain_error("bessel_clifford_third: mu and nu must be > -1");
    double mxk_over_kfact = 1.0;
    return sum_oracle("bessel_clifford_third", [&](int k) {
        if (k > 0)
            mxk_over_kfact *= -x / k;
        return mxk_over_kfact * reciprocal_gamma(k + mu + 1.0) * reciprocal_gamma(k + nu + 1.0);
    });
}

} // namespace wrightmi
