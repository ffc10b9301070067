#include "wrightmi/series.hpp"

#include <cmath>
#include <string>

#include "wrightmi/gamma_kernel.hpp"

namespace wrightmi {

double Coefficient::value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

CoefficientStream::CoefficientStream(const MultiIndexParams& params) : params_(params) {}

Coefficient CoefficientStream::next() {
    const double at = params_.alpha_top();
    const std::size_t n = params_.n();
    if (k_ > 0) {
        // fold the i = k_ factor row into the running double product
        for (std::size_t j = 0; j < n; ++j) {
            const double num = at * k_ + params_.a[j];
            if (is_nonpositive_integer(num))
                throw pole_error("coefficient_stream: numerator gamma pole at i=" +
                                 std::to_string(k_) + ", j=" + std::to_string(j + 1) +
                                 " (argument " + std::to_string(num) + ")");
            const double den = at * k_ + params_.b[j];
            if (is_nonpositive_integer(den)) {
                cum_sign_ = 0; // this and every later coefficient vanish
            } else if (cum_sign_ != 0) {
                const SignedLogGamma gn = log_gamma_signed(num);
                const SignedLogGamma gd = log_gamma_signed(den);
                cum_log_ += gn.log_abs - gd.log_abs;
                cum_sign_ *= gn.sign * gd.sign;
            }
        }
    }
    const double dfin = at * k_ + params_.b_top();
    ++k_;
    if (cum_sign_ == 0 || is_nonpositive_integer(dfin))
        return {0.0, 0};
    const SignedLogGamma gf = log_gamma_signed(dfin);
    return {cum_log_ - gf.log_abs, cum_sign_ * gf.sign};
}

SeriesValue eval_multi_index(const MultiIndexParams& params, double z,
                             double tolerance, int max_terms) {
    if (!(tolerance > 0.0))
        throw domain_error("eval_multi_index: tolerance must be > 0");
    if (max_terms < 1)
        throw domain_error("eval_multi_index: max_terms must be >= 1");
    if (!std::isfinite(z))
        throw domain_error("eval_multi_index: z must be finite");

    CoefficientStream stream(params);
    const double logz = std::log(std::abs(z)); // -inf at z = 0 is fine below
    const bool zneg = z < 0.0;

    SeriesValue out;
    double sum = 0.0;
    double comp = 0.0; // Neumaier carry, keeps the accumulation at ~1 ulp
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        const Coefficient c = stream.next();
        double term = 0.0;
        if (c.sign != 0) {
            if (k == 0) {
                term = c.value(); // z^0 = 1, also for z = 0
            } else {
                const double t = std::exp(c.log_abs + k * logz);
                term = (zneg && (k & 1)) ? -c.sign * t : c.sign * t;
            }
        }
        const double next = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
        out.terms_used = k + 1;
        out.last_term_abs = std::abs(term);
        if (out.last_term_abs <= tolerance * std::max(1.0, std::abs(sum))) {
            if (++small_streak >= 3) {
                out.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    out.value = sum + comp;
    return out;
}

SeriesValue eval_three_param(const ThreeParams& p, double z,
                             double tolerance, int max_terms) {
    return eval_multi_index(p.to_multi_index(), z, tolerance, max_terms);
}

} // namespace wrightmi
