#pragma once

#include "wrightmi/errors.hpp"

namespace wrightmi {

// Absolute distance below which an argument counts as sitting on a
// non-positive integer (a gamma pole).
inline constexpr double pole_threshold = 1e-12;

// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs;
    int sign; // +1 or -1; +1 for all x > 0
};

// True if x is within pole_threshold of 0, -1, -2, ...
bool is_nonpositive_integer(double x);

// Gamma(x). Throws pole_error on non-positive integers and overflow_error
// when |Gamma(x)| exceeds the double range.
double gamma(double x);

// Overflow-safe form usable for x up to 1e6. Throws pole_error at poles.
SignedLogGamma log_gamma_signed(double x);

// 1/Gamma(x), entire: returns exactly 0 at non-positive integers.
double reciprocal_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x). Throws pole_error at non-positive integers.
double digamma(double x);

} // namespace wrightmi
