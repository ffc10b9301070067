#include "wrightmi/tabulate.hpp"

#include <cmath>
#include <cstdio>

#include "wrightmi/errors.hpp"

namespace wrightmi {

namespace {

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string num_label(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

void require_range(const char* fn, double x_min, double x_max, int points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
        throw domain_error(std::string(fn) + ": needs x_min < x_max");
    if (points < 2)
        throw domain_error(std::string(fn) + ": needs points >= 2");
}

} // namespace

const std::vector<double>& figure_nu_values() {
    static const std::vector<double> nus = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    return nus;
}

std::string figure_panel_csv(char panel, double x_min, double x_max, int points) {
    require_range("figure_panel_csv", x_min, x_max, points);

    double alpha = 0.0, beta = 1.0;
    bool sqrt_argument = false;
    switch (panel) {
    case 'a': alpha = 0.0; beta = 1.0; break;
    case 'b': alpha = 1.0; beta = 1.0; break;
    case 'c': alpha = 0.5; beta = 0.5; sqrt_argument = true; break;
    case 'd': alpha = 0.5; beta = 1.0; break;
    default:
        throw domain_error(std::string("figure_panel_csv: panel must be one of a, b, c, d, "
                                       "got '") + panel + "'");
    }
    if (sqrt_argument && x_min < 0.0)
        throw domain_error("figure_panel_csv: panel c needs x >= 0");

    const std::vector<double>& nus = figure_nu_values();
    std::string out = "x";
    for (double nu : nus) out += ",nu=" + num_label(nu);
    out += '\n';

    for (int i = 0; i < points; ++i) {
        const double x = x_min + (x_max - x_min) * i / (points - 1);
        out += num17(x);
        const double arg = sqrt_argument ? std::sqrt(x) : x;
        for (double nu : nus) {
            const SeriesValue v = eval_three_param(ThreeParams(alpha, beta, nu), arg);
            if (!v.converged)
                throw convergence_error("figure_panel_csv: series did not converge at x = " +
                                        num17(x));
            out += ',';
            out += num17(v.value);
        }
        out += '\n';
    }
    return out;
}

std::string table_csv(const MultiIndexParams& params, double x_min, double x_max, int points,
                      double tolerance, int max_terms) {
    require_range("table_csv", x_min, x_max, points);

    std::string out = "x,value,terms_used,converged\n";
    char buf[32];
    for (int i = 0; i < points; ++i) {
        const double x = x_min + (x_max - x_min) * i / (points - 1);
        const SeriesValue v = eval_multi_index(params, x, tolerance, max_terms);
        out += num17(x);
        out += ',';
        out += num17(v.value);
        std::snprintf(buf, sizeof buf, ",%d,", v.terms_used);
        out += buf;
        out += v.converged ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace wrightmi
