#include "wrightmi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/power_series.hpp"
#include "wrightmi/reference_functions.hpp"

namespace wrightmi {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Shared summation loop for transformed series: small-term stop (three
// consecutive terms below tolerance) plus a divergence stop (ten consecutive
// indices of strict term growth leave converged=false).
class TransformAccumulator {
public:
    TransformAccumulator(double tolerance, int max_terms)
        : tol_(tolerance), max_terms_(max_terms) {}

    // Returns true while more terms are wanted.
    bool feed(double term) {
        const double mag = std::fabs(term);
        if (last_mag_ > 0.0 && mag > last_mag_) {
            if (++growth_streak_ >= 10) return false;
        } else {
            growth_streak_ = 0;
        }
        last_mag_ = mag;
        out_.value += term;
        out_.last_term_abs = mag;
        ++out_.terms_used;
        if (mag <= tol_ * std::max(1.0, std::fabs(out_.value))) {
            if (++small_streak_ >= 3) {
                out_.converged = true;
                return false;
            }
        } else {
            small_streak_ = 0;
        }
        return out_.terms_used < max_terms_;
    }

    const SeriesValue& result() const { return out_; }

private:
    double tol_;
    int max_terms_;
    SeriesValue out_;
    double last_mag_ = 0.0;
    int growth_streak_ = 0;
    int small_streak_ = 0;
};

void require_positive_grid(const char* fn, const std::vector<double>& grid, double hi) {
    if (grid.empty())
        throw domain_error(std::string(fn) + ": grid must be non-empty");
    for (double x : grid) {
        if (!std::isfinite(x) || !(x > 0.0) || x > hi)
            throw domain_error(std::string(fn) + ": grid points must lie in (0, " + fmt(hi) +
                               "], got " + fmt(x));
    }
}

// Materializes W coefficients once so the quadrature can evaluate the series
// cheaply at many abscissas.
class CachedSeries {
public:
    explicit CachedSeries(const MultiIndexParams& params) : stream_(params) {}

    double eval(double z) {
        const double logz = std::log(std::fabs(z));
        const bool zneg = z < 0.0;
        double sum = 0.0;
        int small_streak = 0;
        for (int k = 0; k < cache_max_terms; ++k) {
            const Coefficient& c = coeff(k);
            double term = 0.0;
            if (c.sign != 0) {
                double t = (k == 0) ? std::exp(c.log_abs) : std::exp(c.log_abs + k * logz);
                term = (zneg && (k & 1)) ? -c.sign * t : c.sign * t;
            }
            sum += term;
            if (std::fabs(term) <= 1e-15 * std::max(1.0, std::fabs(sum))) {
                if (++small_streak >= 3) return sum;
            } else {
                small_streak = 0;
            }
        }
        throw convergence_error("laplace_quadrature: integrand series did not converge within " +
                                std::to_string(cache_max_terms) + " terms at z = " + fmt(z));
    }

private:
    static constexpr int cache_max_terms = 400;

    const Coefficient& coeff(int k) {
        while (static_cast<int>(coeffs_.size()) <= k) coeffs_.push_back(stream_.next());
        return coeffs_[static_cast<std::size_t>(k)];
    }

    CoefficientStream stream_;
    std::vector<Coefficient> coeffs_;
};

// Tanh-sinh rule on [0, upper]. Levels halve h until successive estimates
// agree to 0.5e-10 (relative to max(1, |I|)); node walk stops where the
// double-exponential weights are negligible.
template <typename F>
double tanh_sinh_integrate(F&& f, double upper) {
    const double half = 0.5 * upper;
    const double piover2 = 1.5707963267948966;
    auto level_sum = [&](double h) {
        double total = 0.0;
        for (int i = 0;; ++i) {
            const double t = i * h;
            if (t > 4.75) break;
            const double sh = piover2 * std::sinh(t);
            const double csh = std::cosh(sh);
            const double w = half * piover2 * std::cosh(t) / (csh * csh);
            const double u = std::tanh(sh);
            double contrib;
            if (i == 0) {
                contrib = w * f(half);
            } else {
                contrib = w * (f(half * (1.0 + u)) + f(half * (1.0 - u)));
            }
            total += contrib;
        }
        return h * total;
    };
    double prev = level_sum(1.0);
    for (int m = 1; m <= 8; ++m) {
        const double cur = level_sum(std::ldexp(1.0, -m));
        if (m >= 3 && std::fabs(cur - prev) <= 0.5e-10 * std::max(1.0, std::fabs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

// (1/s) sum_k [prod_{i<=k} w Gamma(beta i+1-alpha)/Gamma(beta i+1)]
//   Gamma(rho k+1)/Gamma(beta k+1-alpha+nu) (lambda/s^rho)^k,
// w = beta when beta_weighted, else 1.
SeriesValue three_param_transform_series(const ThreeParams& p, double lambda, double rho,
                                         double s, bool beta_weighted, double tolerance,
                                         int max_terms) {
    const double logx = std::log(std::fabs(lambda)) - rho * std::log(s);
    const bool xneg = lambda < 0.0;
    const double logs = std::log(s);
    const double logw = beta_weighted ? std::log(p.beta) : 0.0;
    double cum_log = 0.0;
    int cum_sign = 1;
    TransformAccumulator acc(tolerance, max_terms);
    for (int k = 0;; ++k) {
        if (k > 0) {
            const double num = p.beta * k + 1.0 - p.alpha;
            if (is_nonpositive_integer(num))
                throw pole_error(
                    "three-parameter transform: gamma argument beta*k+1-alpha is a "
                    "non-positive integer at k = " +
                    std::to_string(k));
            const SignedLogGamma lgn = log_gamma_signed(num);
            const SignedLogGamma lgd = log_gamma_signed(p.beta * k + 1.0);
            cum_log += lgn.log_abs - lgd.log_abs + logw;
            cum_sign *= lgn.sign * lgd.sign;
        }
        const double gk = p.beta * k + 1.0 - p.alpha + p.nu;
        double term = 0.0;
        if (!is_nonpositive_integer(gk)) {
            const SignedLogGamma lgg = log_gamma_signed(gk);
            const double lgr = log_gamma_signed(rho * k + 1.0).log_abs;
            const double logt =
                cum_log + lgr - lgg.log_abs + (k == 0 ? 0.0 : k * logx) - logs;
            const double t = std::exp(logt);
            const int sign = cum_sign * lgg.sign;
            term = (xneg && (k & 1)) ? -sign * t : sign * t;
        }
        if (!acc.feed(term)) break;
    }
    return acc.result();
}

// K-term truncation of W_p(lambda x^beta) as a series in x, exponents
// offset + beta k.
GeneralizedPowerSeries three_param_gps(const ThreeParams& p, double lambda, int K,
                                       double offset) {
    CoefficientStream stream(p.to_multi_index());
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(K));
    const double loglam = std::log(std::fabs(lambda));
    const bool neg = lambda < 0.0;
    for (int k = 0; k < K; ++k) {
        const Coefficient c = stream.next();
        double v = 0.0;
        if (c.sign != 0) {
            const double t = (k == 0) ? std::exp(c.log_abs) : std::exp(c.log_abs + k * loglam);
            v = (neg && (k & 1)) ? -c.sign * t : c.sign * t;
        }
        coeffs.push_back(v);
    }
    return make_gps(offset, p.beta, coeffs);
}

// K-term truncation of weight * z^{offset} E_{a,c}(z^a).
GeneralizedPowerSeries ml_gps(double a, double c, double offset, int K, double weight) {
    std::vector<double> coeffs(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
        coeffs[static_cast<std::size_t>(k)] = weight * reciprocal_gamma(a * k + c);
    return make_gps(offset, a, coeffs);
}

struct GridScan {
    double max_abs = 0.0;
    double max_rel = 0.0;
};

// Noise floor for residuals that cancel exactly termwise.
constexpr double noise_floor = 1e-12;

} // namespace

SeriesValue laplace_series_multi(const MultiIndexParams& params, double lambda, double s,
                                 double tolerance, int max_terms) {
    if (!(tolerance > 0.0))
        throw domain_error("laplace_series_multi: tolerance must be > 0");
    if (max_terms < 1)
        throw domain_error("laplace_series_multi: max_terms must be >= 1");
    if (!std::isfinite(lambda))
        throw domain_error("laplace_series_multi: lambda must be finite");
    if (!std::isfinite(s) || !(s > 0.0))
        throw domain_error("laplace_series_multi: s must be positive and finite, got " + fmt(s));

    const double ahat = params.alpha_top();
    const double logx = std::log(std::fabs(lambda)) - ahat * std::log(s);
    const bool xneg = lambda < 0.0;
    const double logs = std::log(s);

    CoefficientStream stream(params);
    TransformAccumulator acc(tolerance, max_terms);
    for (int k = 0;; ++k) {
        const Coefficient c = stream.next();
        double term = 0.0;
        if (c.sign != 0) {
            const double lg = log_gamma_signed(ahat * k + 1.0).log_abs;
            const double logt = c.log_abs + lg + (k == 0 ? 0.0 : k * logx) - logs;
            const double t = std::exp(logt);
            term = (xneg && (k & 1)) ? -c.sign * t : c.sign * t;
        }
        if (!acc.feed(term)) break;
    }
    return acc.result();
}

double laplace_quadrature(const MultiIndexParams& params, double lambda, double s,
                          double rho) {
    if (!std::isfinite(s) || !(s > 0.0))
        throw domain_error("laplace_quadrature: s must be positive and finite, got " + fmt(s));
    if (!std::isfinite(rho) || !(rho > 0.0))
        throw domain_error("laplace_quadrature: rho must be positive and finite, got " +
                           fmt(rho));
    if (!std::isfinite(lambda))
        throw domain_error("laplace_quadrature: lambda must be finite");

    CachedSeries w(params);
    auto f = [&](double x) { return std::exp(-s * x) * w.eval(lambda * std::pow(x, rho)); };

    // Push the cutoff out until |f(X)| * 2/s bounds the dropped tail below
    // 1e-13 and the integrand is still falling at rate >= s/2 past X.
    double X = 10.0;
    const double x_max = 200.0;
    for (;;) {
        const double fX = std::fabs(f(X));
        bool ok = fX * (2.0 / s) <= 1e-13;
        if (ok) {
            for (double c : {1.05, 1.12}) {
                const double t = c * X;
                const double bound = fX * std::exp(-0.5 * s * (t - X)) * 1.01 + 1e-200;
                if (std::fabs(f(t)) > bound) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) break;
        X *= 1.5;
        if (X > x_max)
            throw convergence_error("laplace_quadrature: integrand tail not bounded by x = " +
                                    fmt(x_max) + " (s = " + fmt(s) + ", lambda = " + fmt(lambda) +
                                    ", rho = " + fmt(rho) + ")");
    }
    return tanh_sinh_integrate(f, X);
}

ThreeParamLaplaceCheck laplace_three_param_check(const ThreeParams& p, double lambda,
                                                 double rho,
                                                 const std::vector<double>& s_grid) {
    if (!std::isfinite(rho) || !(rho > 0.0))
        throw domain_error("laplace_three_param_check: rho must be positive and finite, got " +
                           fmt(rho));
    if (!std::isfinite(lambda))
        throw domain_error("laplace_three_param_check: lambda must be finite");
    if (s_grid.empty())
        throw domain_error("laplace_three_param_check: s_grid must be non-empty");
    for (double s : s_grid) {
        if (!std::isfinite(s) || !(s >= 2.0))
            throw domain_error("laplace_three_param_check: s values must be >= 2, got " +
                               fmt(s));
    }

    const MultiIndexParams mp = p.to_multi_index();
    ThreeParamLaplaceCheck out;
    for (double s : s_grid) {
        const double quad = laplace_quadrature(mp, lambda, s, rho);
        const SeriesValue cand =
            three_param_transform_series(p, lambda, rho, s, true, default_tolerance,
                                         default_max_terms);
        const SeriesValue ref =
            (rho == p.beta)
                ? laplace_series_multi(mp, lambda, s)
                : three_param_transform_series(p, lambda, rho, s, false, default_tolerance,
                                               default_max_terms);
        if (!cand.converged || !ref.converged)
            throw convergence_error(
                "laplace_three_param_check: transformed series did not converge at s = " +
                fmt(s));
        out.candidate.push_back({s, cand.value, quad, std::fabs(cand.value - quad)});
        out.reference.push_back({s, ref.value, quad, std::fabs(ref.value - quad)});
        out.candidate_vs_reference.push_back(std::fabs(cand.value - ref.value));
        out.max_candidate_vs_reference =
            std::max(out.max_candidate_vs_reference, out.candidate_vs_reference.back());
    }
    return out;
}

ResidualReport recurrence_residual_main(const ThreeParams& p,
                                        const std::vector<double>& x_grid, int K) {
    if (K < 2)
        throw domain_error("recurrence_residual_main: K must be >= 2");
    if (!(p.alpha > 0.0) || p.alpha > 1.0)
        throw domain_error("recurrence_residual_main: alpha must lie in (0, 1], got " +
                           fmt(p.alpha));
    if (p.beta > 1.0)
        throw domain_error("recurrence_residual_main: beta must lie in (0, 1], got " +
                           fmt(p.beta));
    if (!(p.nu + p.beta - p.alpha > 0.0))
        throw domain_error("recurrence_residual_main: needs nu + beta - alpha > 0, got " +
                           fmt(p.nu + p.beta - p.alpha));
    require_positive_grid("recurrence_residual_main", x_grid, 1.0);

    const ThreeParams p_up(p.alpha, p.beta, p.nu + p.beta);
    const ThreeParams p_dn(p.alpha, p.beta, p.nu - p.beta);
    const GeneralizedPowerSeries m1 =
        three_param_gps(p_up, 1.0, K, p.nu - p.alpha + p.beta);
    const GeneralizedPowerSeries t1 =
        multiply_power(caputo_derivative(m1, p.beta), p.alpha + p.beta);
    GeneralizedPowerSeries t2 = three_param_gps(p, 1.0, K, p.nu + p.beta);
    const GeneralizedPowerSeries m3 = three_param_gps(p_dn, 1.0, K, 0.0);
    const GeneralizedPowerSeries t3 =
        multiply_power(caputo_derivative(m3, p.alpha), p.alpha + p.nu);

    // Single dropped boundary term: coefficient |c_{K-1}| of the middle
    // member at exponent beta K + nu (positive, so maximal at max x).
    const double c_last = std::fabs(t2.coeffs.back());
    const double x_top = *std::max_element(x_grid.begin(), x_grid.end());
    const double bound = c_last * std::pow(x_top, t2.exponent(t2.coeffs.size() - 1) + p.beta);

    for (double& c : t2.coeffs) c *= 2.0;

    ResidualReport r;
    r.identity_id = "three-param-recurrence";
    r.grid = x_grid;
    GridScan scan;
    double scale = 1.0;
    for (double x : x_grid) {
        const double mid = t2.evaluate(x);
        const double res = std::fabs(t1.evaluate(x) - mid + t3.evaluate(x));
        scan.max_abs = std::max(scan.max_abs, res);
        scan.max_rel = std::max(scan.max_rel, res / std::max(1.0, std::fabs(mid)));
        scale = std::max(scale, std::fabs(mid));
    }
    r.max_abs_residual = scan.max_abs;
    r.max_rel_residual = scan.max_rel;
    r.tolerance = bound * (1.0 + 1e-6) + noise_floor * scale;
    r.pass = r.max_abs_residual <= r.tolerance;
    return r;
}

ResidualReport recurrence_residual_bessel_clifford(int n,
                                                   const std::vector<double>& x_grid) {
    if (n < 0)
        throw domain_error("recurrence_residual_bessel_clifford: order must be >= 0, got " +
                           std::to_string(n));
    if (x_grid.empty())
        throw domain_error("recurrence_residual_bessel_clifford: grid must be non-empty");
    for (double x : x_grid) {
        if (!std::isfinite(x) || x < 0.0)
            throw domain_error(
                "recurrence_residual_bessel_clifford: grid points must be >= 0 and finite");
    }

    ResidualReport r;
    r.identity_id = "bessel-clifford-three-term";
    r.grid = x_grid;
    r.tolerance = 1e-10;
    for (double x : x_grid) {
        const double c0 = bessel_clifford(n, x);
        const double res = std::fabs(x * bessel_clifford(n + 2, x) +
                                     (n + 1) * bessel_clifford(n + 1, x) - c0);
        r.max_abs_residual = std::max(r.max_abs_residual, res);
        r.max_rel_residual = std::max(r.max_rel_residual, res / std::max(1.0, std::fabs(c0)));
    }
    r.pass = r.max_abs_residual <= r.tolerance;
    return r;
}

namespace {

void validate_ml_recurrence_args(const char* fn, double alpha, double beta,
                                 const std::vector<double>& z_grid, int K) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw domain_error(std::string(fn) + ": alpha must lie in (0, 1), got " + fmt(alpha));
    if (!std::isfinite(beta) || !(beta > 0.0))
        throw domain_error(std::string(fn) + ": beta must be positive and finite, got " +
                           fmt(beta));
    if (is_nonpositive_integer(beta - alpha))
        throw domain_error(std::string(fn) +
                           ": beta - alpha on a non-positive integer degenerates the third "
                           "member, got " +
                           fmt(beta - alpha));
    if (K < 2)
        throw domain_error(std::string(fn) + ": K must be >= 2");
    require_positive_grid(fn, z_grid, 1.0);
}

struct MlMembers {
    GeneralizedPowerSeries applied; // z^a D^a [z^{a+b-1} E_{a,a+b}(z^a)]
    GeneralizedPowerSeries middle;  // 2 z^{a+b-1} E_{a,b}(z^a)
    GeneralizedPowerSeries third;   // z^{b-1} E_{a,b-a}(z^a)
};

MlMembers build_ml_members(double a, double b, int K) {
    MlMembers m{
        multiply_power(caputo_derivative(ml_gps(a, a + b, a + b - 1.0, K, 1.0), a), a),
        ml_gps(a, b, a + b - 1.0, K, 2.0),
        ml_gps(a, b - a, b - 1.0, K, 1.0),
    };
    return m;
}

} // namespace

ResidualReport recurrence_residual_mittag_leffler(double alpha, double beta,
                                                  const std::vector<double>& z_grid, int K,
                                                  double tolerance) {
    validate_ml_recurrence_args("recurrence_residual_mittag_leffler", alpha, beta, z_grid, K);
    if (!(tolerance > 0.0))
        throw domain_error("recurrence_residual_mittag_leffler: tolerance must be > 0");

    const MlMembers m = build_ml_members(alpha, beta, K);
    ResidualReport r;
    r.identity_id = "mittag-leffler-three-term";
    r.grid = z_grid;
    r.tolerance = tolerance;
    for (double z : z_grid) {
        const double mid = m.middle.evaluate(z);
        const double res =
            std::fabs(m.applied.evaluate(z) - mid + m.third.evaluate(z));
        r.max_abs_residual = std::max(r.max_abs_residual, res);
        r.max_rel_residual =
            std::max(r.max_rel_residual, res / std::max(1.0, 0.5 * std::fabs(mid)));
    }
    r.pass = r.max_abs_residual <= r.tolerance;
    return r;
}

ResidualReport mittag_leffler_recurrence_leftover_gap(double alpha, double beta,
                                                      const std::vector<double>& z_grid,
                                                      int K) {
    validate_ml_recurrence_args("mittag_leffler_recurrence_leftover_gap", alpha, beta, z_grid,
                                K);

    const MlMembers m = build_ml_members(alpha, beta, K);
    const double rg_leftover = reciprocal_gamma(beta - alpha);
    const double rg_tail = reciprocal_gamma(alpha * (K - 1) + beta);

    ResidualReport r;
    r.identity_id = "mittag-leffler-leftover-gap";
    r.grid = z_grid;
    double bound = 0.0;
    double scale = 1.0;
    for (double z : z_grid) {
        const double three_term =
            m.applied.evaluate(z) - m.middle.evaluate(z) + m.third.evaluate(z);
        const double leftover = std::pow(z, beta - 1.0) * rg_leftover;
        const double gap = std::fabs(three_term - leftover);
        r.max_abs_residual = std::max(r.max_abs_residual, gap);
        r.max_rel_residual =
            std::max(r.max_rel_residual, gap / std::max(1.0, std::fabs(leftover)));
        bound = std::max(bound,
                         std::fabs(rg_tail) * std::pow(z, alpha * K + beta - 1.0));
        scale = std::max(scale, std::fabs(leftover));
    }
    r.tolerance = bound * (1.0 + 1e-6) + noise_floor * scale;
    r.pass = r.max_abs_residual <= r.tolerance;
    return r;
}

ResidualReport mittag_leffler_recurrence_two_term(double alpha, double beta,
                                                  const std::vector<double>& z_grid, int K) {
    validate_ml_recurrence_args("mittag_leffler_recurrence_two_term", alpha, beta, z_grid, K);

    const GeneralizedPowerSeries applied =
        multiply_power(caputo_derivative(ml_gps(alpha, alpha + beta, alpha + beta - 1.0, K, 1.0),
                                         alpha),
                       alpha);
    const GeneralizedPowerSeries rhs = ml_gps(alpha, beta, alpha + beta - 1.0, K, 1.0);

    ResidualReport r;
    r.identity_id = "mittag-leffler-two-term";
    r.grid = z_grid;
    double scale = 1.0;
    for (double z : z_grid) {
        const double want = rhs.evaluate(z);
        const double res = std::fabs(applied.evaluate(z) - want);
        r.max_abs_residual = std::max(r.max_abs_residual, res);
        r.max_rel_residual = std::max(r.max_rel_residual, res / std::max(1.0, std::fabs(want)));
        scale = std::max(scale, std::fabs(want));
    }
    r.tolerance = noise_floor * scale;
    r.pass = r.max_abs_residual <= r.tolerance;
    return r;
}

WrightRecurrenceReports recurrence_residual_wright(double lambda, double nu,
                                                   const std::vector<double>& z_grid,
                                                   int K) {
    if (!(lambda > 0.0) || !(lambda < 1.0))
        throw domain_error("recurrence_residual_wright: lambda must lie in (0, 1), got " +
                           fmt(lambda));
    if (!(lambda + nu > 1.0))
        throw domain_error("recurrence_residual_wright: needs lambda + nu > 1, got " +
                           fmt(lambda + nu));
    if (K < 2)
        throw domain_error("recurrence_residual_wright: K must be >= 2");
    if (z_grid.empty())
        throw domain_error("recurrence_residual_wright: grid must be non-empty");
    for (double z : z_grid) {
        if (!std::isfinite(z) || !(z > 0.0))
            throw domain_error(
                "recurrence_residual_wright: grid points must be positive and finite");
    }

    // W_{l,m}(z^l / l) as a series in z: coefficients (1/l)^k / (k! Gamma(l k + m)).
    auto wright_gps = [&](double m, double offset, int terms) {
        std::vector<double> coeffs(static_cast<std::size_t>(terms));
        const double log_invl = -std::log(lambda);
        double lgfact = 0.0;
        for (int k = 0; k < terms; ++k) {
            if (k > 0) lgfact += std::log(static_cast<double>(k));
            coeffs[static_cast<std::size_t>(k)] =
                reciprocal_gamma(lambda * k + m) * std::exp(k * log_invl - lgfact);
        }
        return make_gps(offset, lambda, coeffs);
    };

    WrightRecurrenceReports out;

    {
        const GeneralizedPowerSeries lhs =
            caputo_derivative(wright_gps(lambda + nu, lambda + nu - 1.0, K), lambda);
        const GeneralizedPowerSeries rhs = wright_gps(nu, nu - 1.0, K);
        ResidualReport& r = out.fractional;
        r.identity_id = "wright-fractional-shift";
        r.grid = z_grid;
        double scale = 1.0;
        for (double z : z_grid) {
            const double want = rhs.evaluate(z);
            const double res = std::fabs(lhs.evaluate(z) - want);
            r.max_abs_residual = std::max(r.max_abs_residual, res);
            r.max_rel_residual =
                std::max(r.max_rel_residual, res / std::max(1.0, std::fabs(want)));
            scale = std::max(scale, std::fabs(want));
        }
        r.tolerance = noise_floor * scale;
        r.pass = r.max_abs_residual <= r.tolerance;
    }

    {
        const GeneralizedPowerSeries lhs =
            caputo_derivative(wright_gps(nu - lambda, 0.0, K), 1.0);
        const GeneralizedPowerSeries rhs = wright_gps(nu, lambda - 1.0, K - 1);
        ResidualReport& r = out.first_derivative;
        r.identity_id = "wright-first-derivative";
        r.grid = z_grid;
        double scale = 1.0;
        for (double z : z_grid) {
            const double want = rhs.evaluate(z);
            const double res = std::fabs(lhs.evaluate(z) - want);
            r.max_abs_residual = std::max(r.max_abs_residual, res);
            r.max_rel_residual =
                std::max(r.max_rel_residual, res / std::max(1.0, std::fabs(want)));
            scale = std::max(scale, std::fabs(want));
        }
        r.tolerance = noise_floor * scale;
        r.pass = r.max_abs_residual <= r.tolerance;
    }

    return out;
}

SeriesValue param_derivative(const ThreeParams& p, ParamTag which, double z,
                             double tolerance, int max_terms) {
    if (!(tolerance > 0.0))
        throw domain_error("param_derivative: tolerance must be > 0");
    if (max_terms < 1)
        throw domain_error("param_derivative: max_terms must be >= 1");
    if (!std::isfinite(z))
        throw domain_error("param_derivative: z must be finite");

    const double a = p.alpha;
    const double b = p.beta;
    const double n = p.nu;
    const double logz = std::log(std::fabs(z));
    const bool zneg = z < 0.0;

    double log_p = 0.0; // log |P_k|
    int sign_p = 1;
    double sum_num = 0.0;  // sum_{j<=k} psi(beta j + 1 - alpha)
    double sum_wnum = 0.0; // sum_{j<=k} j (psi(beta j+1-alpha) - psi(beta j+1))

    SeriesValue out;
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            const double num = b * k + 1.0 - a;
            if (is_nonpositive_integer(num))
                throw pole_error(
                    "param_derivative: argument beta*j+1-alpha is a non-positive integer at "
                    "k = " +
                    std::to_string(k) + ", j = " + std::to_string(k) + " (value " + fmt(num) +
                    ")");
            const double den = b * k + 1.0;
            const SignedLogGamma lgn = log_gamma_signed(num);
            const SignedLogGamma lgd = log_gamma_signed(den);
            log_p += lgn.log_abs - lgd.log_abs;
            sign_p *= lgn.sign * lgd.sign;
            const double psi_num = digamma(num);
            sum_num += psi_num;
            sum_wnum += k * (psi_num - digamma(den));
        }
        const double gk = b * k + 1.0 - a + n;
        if (is_nonpositive_integer(gk))
            throw pole_error(
                "param_derivative: argument beta*k+1-alpha+nu is a non-positive integer at "
                "k = " +
                std::to_string(k) + " (value " + fmt(gk) + ")");
        const SignedLogGamma lgg = log_gamma_signed(gk);
        const double psig = digamma(gk);
        double bracket = 0.0;
        switch (which) {
        case ParamTag::nu:
            bracket = -psig;
            break;
        case ParamTag::beta:
            bracket = sum_wnum - k * psig;
            break;
        case ParamTag::alpha:
            bracket = -sum_num + psig;
            break;
        }
        const double mag = std::exp(log_p - lgg.log_abs + (k == 0 ? 0.0 : k * logz));
        double term = sign_p * lgg.sign * bracket * mag;
        if (zneg && (k & 1)) term = -term;
        out.value += term;
        out.last_term_abs = std::fabs(term);
        ++out.terms_used;
        if (out.last_term_abs <= tolerance * std::max(1.0, std::fabs(out.value))) {
            if (++small_streak >= 3) {
                out.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    return out;
}

ResidualReport param_derivative_fd_check(const ThreeParams& p, ParamTag which, double z,
                                         double h) {
    if (!(h >= 1e-6 && h <= 1e-4))
        throw domain_error("param_derivative_fd_check: h must lie in [1e-6, 1e-4], got " +
                           fmt(h));

    auto perturbed = [&](double d) {
        double a = p.alpha, b = p.beta, n = p.nu;
        switch (which) {
        case ParamTag::alpha: a += d; break;
        case ParamTag::beta: b += d; break;
        case ParamTag::nu: n += d; break;
        }
        try {
            return ThreeParams(a, b, n);
        } catch (const domain_error& e) {
            throw domain_error(
                std::string("param_derivative_fd_check: perturbed parameters leave the valid "
                            "domain: ") +
                e.what());
        }
    };
    const ThreeParams pp = perturbed(h);
    const ThreeParams pm = perturbed(-h);

    const SeriesValue fp = eval_three_param(pp, z, 1e-15, 400);
    const SeriesValue fm = eval_three_param(pm, z, 1e-15, 400);
    const SeriesValue dv = param_derivative(p, which, z, 1e-15, 400);
    if (!fp.converged || !fm.converged || !dv.converged)
        throw convergence_error("param_derivative_fd_check: series did not converge at z = " +
                                fmt(z));

    const double central = (fp.value - fm.value) / (2.0 * h);
    const double diff = std::fabs(central - dv.value);
    const double scale = std::max(1.0, std::fabs(dv.value));

    ResidualReport r;
    switch (which) {
    case ParamTag::alpha: r.identity_id = "param-derivative-alpha-fd"; break;
    case ParamTag::beta: r.identity_id = "param-derivative-beta-fd"; break;
    case ParamTag::nu: r.identity_id = "param-derivative-nu-fd"; break;
    }
    r.grid = {z};
    r.max_abs_residual = diff;
    r.max_rel_residual = diff / scale;
    r.tolerance = 1e4 * h * h * scale;
    r.pass = diff <= r.tolerance;
    return r;
}

} // namespace wrightmi
