#pragma once

#include "wrightmi/params.hpp"

namespace wrightmi {

inline constexpr double default_tolerance = 1e-14;
inline constexpr int default_max_terms = 300;

// A truncated series value with its diagnostics.
struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    double last_term_abs = 0.0;
    bool converged = false;
};

// One series coefficient in log-magnitude form. sign == 0 means the
// coefficient is exactly zero (a denominator gamma pole).
struct Coefficient {
    double log_abs;
    int sign;

    double value() const;
};

// Emits c_0, c_1, ... for
//   W(z) = sum_k [prod_{i=1..k} prod_{j=1..n} G(a' i + a_j)/G(a' i + b_j)]
//          * z^k / G(a' k + b_{n+1}),      a' = alpha_{n+1},
// accumulating the double product in log magnitude plus sign so that k in
// the hundreds cannot overflow. Single consumer; construction is cheap.
//
// Pole handling: a numerator gamma pole (some a' i + a_j on a non-positive
// integer) makes the term infinite and throws. A pole in one of the
// cumulative denominators G(a' i + b_j), j <= n, zeroes the coefficient and
// every successor. A pole in the per-k denominator G(a' k + b_{n+1}) zeroes
// only that coefficient.
class CoefficientStream {
  public:
    explicit CoefficientStream(const MultiIndexParams& params);

    int k() const { return k_; } // index of the next coefficient
    Coefficient next();

    double next_value() { return next().value(); }

  private:
    const MultiIndexParams params_;
    int k_ = 0;
    double cum_log_ = 0.0;
    int cum_sign_ = 1;
};

// Partial sum of W at z, stopping at the first index where three
// consecutive terms have magnitude <= tolerance * max(1, |partial sum|).
// converged=false (never a fabricated value) if max_terms is exhausted.
SeriesValue eval_multi_index(const MultiIndexParams& params, double z,
                             double tolerance = default_tolerance,
                             int max_terms = default_max_terms);

// Same evaluation on the converted n=1 parameters, bit for bit.
SeriesValue eval_three_param(const ThreeParams& p, double z,
                             double tolerance = default_tolerance,
                             int max_terms = default_max_terms);

} // namespace wrightmi
