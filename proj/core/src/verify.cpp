#include "wrightmi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wrightmi/analysis.hpp"
#include "wrightmi/errors.hpp"
#include "wrightmi/gamma_kernel.hpp"
#include "wrightmi/power_series.hpp"
#include "wrightmi/reference_functions.hpp"
#include "wrightmi/series.hpp"

namespace wrightmi {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Seeded draws with an explicit uniform construction so outputs are
// byte-identical across standard libraries.
class DrawStream {
public:
    explicit DrawStream(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }

    int integer(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 rng_;
};

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t suite_index) {
    return seed * 1000003ULL + suite_index;
}

std::vector<double> unit_grid(int n) { // n points (0, 1], ending at 1
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (i + 1) / static_cast<double>(n);
    return g;
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

VerifyRecord from_report(const ResidualReport& r, std::string id, std::string suite,
                         std::string params, double criterion) {
    VerifyRecord rec;
    rec.id = std::move(id);
    rec.suite = std::move(suite);
    rec.params = std::move(params);
    rec.grid = r.grid;
    rec.max_abs_residual = r.max_abs_residual;
    rec.max_rel_residual = r.max_rel_residual;
    rec.tolerance = std::min(r.tolerance, criterion);
    rec.status = pass_fail(r.pass && r.max_abs_residual <= criterion);
    return rec;
}

// ---- reductions ----

void suite_reductions(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 1));
    const double tol = 1e-9;
    const int draws = 20;

    struct Family {
        const char* id;
        const char* params;
    };

    auto push = [&](const char* id, const char* params, const std::vector<double>& grid,
                    double max_abs, double max_rel) {
        VerifyRecord rec;
        rec.id = id;
        rec.suite = "reductions";
        rec.params = params;
        rec.grid = grid;
        rec.max_abs_residual = max_abs;
        rec.max_rel_residual = max_rel;
        rec.tolerance = tol;
        rec.status = pass_fail(max_rel <= tol);
        out.push_back(std::move(rec));
    };

    // Draws z until the oracle value is large enough for a meaningful
    // relative comparison.
    auto sized_draw = [&](double lo, double hi, const auto& oracle) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            const double z = draw.uniform(lo, hi);
            if (std::fabs(oracle(z)) >= 0.05) return z;
        }
        throw convergence_error("suite_reductions: could not draw a well-scaled point");
    };

    { // alpha = 1 lands on the classical Wright function at z/beta
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double beta = draw.uniform(0.3, 1.5);
            const double nu = draw.uniform(0.2, 2.0);
            const double z =
                sized_draw(-2.0, 2.0, [&](double t) { return wright(beta, nu, t / beta); });
            const double want = wright(beta, nu, z / beta);
            const double got = eval_three_param(ThreeParams(1.0, beta, nu), z, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::fabs(want));
            grid.push_back(z);
        }
        push("reduction-wright", "alpha=1, beta in (0.3,1.5), nu in (0.2,2)", grid, max_abs,
             max_rel);
    }

    { // alpha = 0 lands on the two-parameter Mittag-Leffler function
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double beta = draw.uniform(0.4, 2.0);
            const double nu = draw.uniform(0.0, 2.0);
            const double z =
                sized_draw(-3.0, 3.0, [&](double t) { return mittag_leffler(beta, nu + 1.0, t); });
            const double want = mittag_leffler(beta, nu + 1.0, z);
            const double got = eval_three_param(ThreeParams(0.0, beta, nu), z, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::fabs(want));
            grid.push_back(z);
        }
        push("reduction-mittag-leffler", "alpha=0, beta in (0.4,2), nu in (0,2)", grid, max_abs,
             max_rel);
    }

    { // (nu,nu,nu) telescopes to sum z^k / Gamma(nu k + 1)^2
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double nu = draw.uniform(0.3, 1.5);
            const std::vector<double> al = {nu, nu};
            const std::vector<double> be = {1.0, 1.0};
            const double z = sized_draw(
                -2.0, 2.0, [&](double t) { return multi_index_mittag_leffler(al, be, t); });
            const double want = multi_index_mittag_leffler(al, be, z);
            const double got = eval_three_param(ThreeParams(nu, nu, nu), z, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::fabs(want));
            grid.push_back(z);
        }
        push("reduction-alpha-mittag-leffler", "alpha=beta=nu in (0.3,1.5)", grid, max_abs,
             max_rel);
    }

    { // all alpha_j = 1 (n=2): product of gammas times the hyper-Bessel series
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double nu1 = draw.uniform(0.5, 2.0);
            const double nu2 = draw.uniform(0.5, 2.0);
            const MultiIndexParams p =
                MultiIndexParams::make({1.0, 1.0, 1.0}, {nu1, nu2});
            const HyperBesselIndices idx{{p.a[1], p.a[2]}};
            const double pre = gamma(1.0 + p.a[0]) * gamma(1.0 + p.a[1]);
            const double z =
                sized_draw(-2.0, 2.0, [&](double t) { return pre * hyper_bessel(idx, -t); });
            const double want = pre * hyper_bessel(idx, -z);
            const double got = eval_multi_index(p, z, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::fabs(want));
            grid.push_back(z);
        }
        push("reduction-hyper-bessel", "n=2, all alpha_j=1, nu_j in (0.5,2)", grid, max_abs,
             max_rel);
    }

    { // (1,1,nu+1) is the second-order Bessel-Clifford function C_nu
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double nu = draw.uniform(-0.5, 2.0);
            const double x = draw.uniform(0.05, 3.0);
            const double want = bessel_clifford(nu, x);
            const double got =
                eval_three_param(ThreeParams(1.0, 1.0, nu + 1.0), x, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::fabs(want));
            grid.push_back(x);
        }
        push("reduction-bessel-clifford", "alpha=beta=1, order in (-0.5,2)", grid, max_abs,
             max_rel);
    }

    { // third-order Bessel-Clifford via n=2, all alpha_j=1, argument -x
        double max_abs = 0.0, max_rel = 0.0;
        std::vector<double> grid;
        for (int i = 0; i < draws; ++i) {
            const double mu = draw.uniform(0.0, 2.0);
            const double nu = draw.uniform(0.0, 2.0);
            const double x = draw.uniform(0.05, 2.0);
            const MultiIndexParams p =
                MultiIndexParams::make({1.0, 1.0, 1.0}, {nu + 1.0, mu - nu + 1.0});
            const double want = bessel_clifford_third(mu, nu, x);
            const double got =
                reciprocal_gamma(nu + 1.0) * eval_multi_index(p, -x, 1e-15, 400).value;
            const double d = std::fabs(got - want);
            max_abs = std::max(max_abs, d);
            max_rel = std::max(max_rel, d / std::max(0.05, std::fabs(want)));
            grid.push_back(x);
        }
        push("reduction-bessel-clifford-third", "n=2, all alpha_j=1, mu,nu in (0,2)", grid,
             max_abs, max_rel);
    }
}

// ---- eigen ----

void suite_eigen(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 2));
    const std::vector<double> grid = unit_grid(8);

    for (int i = 0; i < 10; ++i) {
        const int n = 1 + (i % 2);

        // Rejection-sample so every b_j clears the Caputo envelope of the
        // composed operator by a margin.
        std::vector<double> alphas, nus;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 2000)
                throw convergence_error("suite_eigen: envelope rejection failed");
            alphas.clear();
            nus.clear();
            for (int j = 0; j < n + 1; ++j) alphas.push_back(draw.uniform(0.3, 1.0));
            for (int j = 0; j < n; ++j) nus.push_back(draw.uniform(0.3, 2.0));
            const double floor_b = 1.0 - alphas.back() + 0.05;
            double b = 1.0;
            bool ok = true;
            for (int j = 0; j < n; ++j) {
                b += nus[static_cast<std::size_t>(j)] - alphas[static_cast<std::size_t>(j)];
                if (b < floor_b) {
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
        const MultiIndexParams p = MultiIndexParams::make(alphas, nus);
        const double lambda = draw.uniform(0.5, 1.25);

        std::string params = "n=" + std::to_string(n) + ", alphas=";
        for (std::size_t j = 0; j < p.alphas.size(); ++j)
            params += (j ? "," : "") + fmt(p.alphas[j]);
        params += ", nus=";
        for (std::size_t j = 0; j < p.nus.size(); ++j) params += (j ? "," : "") + fmt(p.nus[j]);
        params += ", lambda=" + fmt(lambda);

        const ResidualReport r40 = eigen_residual(p, lambda, 40, grid);
        out.push_back(from_report(r40, "eigen-residual-" + std::to_string(i), "eigen", params,
                                  1e-8));

        // Decay evidence: pick the largest K in [4,40] whose analytic
        // boundary-term bound is still >= 1e-9 (measurable above rounding),
        // then doubling K must shrink the residual at least 1e3-fold.
        CoefficientStream stream(p);
        std::vector<double> logc;
        for (int k = 0; k < 80; ++k) {
            const Coefficient c = stream.next();
            logc.push_back(c.sign == 0 ? -1e300 : c.log_abs);
        }
        const double loglam = std::log(lambda);
        int K0 = 4;
        for (int K = 4; K <= 40; ++K) {
            const double logbound = K * loglam + logc[static_cast<std::size_t>(K - 1)];
            if (logbound >= std::log(1e-9)) K0 = K;
        }
        const ResidualReport r1 = eigen_residual(p, lambda, K0, grid);
        const ResidualReport r2 = eigen_residual(p, lambda, 2 * K0, grid);
        VerifyRecord rec;
        rec.id = "eigen-decay-" + std::to_string(i);
        rec.suite = "eigen";
        rec.params = params + ", K0=" + std::to_string(K0);
        rec.grid = grid;
        rec.max_abs_residual = r2.max_abs_residual;
        rec.max_rel_residual =
            r1.max_abs_residual > 0.0 ? r2.max_abs_residual / r1.max_abs_residual : 0.0;
        rec.tolerance = std::max(r1.max_abs_residual / 1e3, 1e-12);
        rec.status = pass_fail(r2.max_abs_residual <= rec.tolerance);
        out.push_back(std::move(rec));
    }
}

// ---- laplace ----

void suite_laplace(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 3));

    { // series formula vs quadrature oracle, absolute 1e-7 at s in {2,3,5}
        const std::vector<double> s_grid = {2.0, 3.0, 5.0};
        for (int i = 0; i < 6; ++i) {
            MultiIndexParams p = (i % 2 == 0)
                ? ThreeParams(draw.uniform(0.3, 1.0), draw.uniform(0.3, 1.0),
                              draw.uniform(0.3, 1.5))
                      .to_multi_index()
                : MultiIndexParams::make({draw.uniform(0.4, 1.0), draw.uniform(0.4, 1.0),
                                          draw.uniform(0.4, 1.0)},
                                         {draw.uniform(0.3, 1.2), draw.uniform(0.3, 1.2)});
            const double lambda = draw.uniform(0.3, 1.0);
            std::string params = "alphas=";
            for (std::size_t j = 0; j < p.alphas.size(); ++j)
                params += (j ? "," : "") + fmt(p.alphas[j]);
            params += ", nus=";
            for (std::size_t j = 0; j < p.nus.size(); ++j)
                params += (j ? "," : "") + fmt(p.nus[j]);
            params += ", lambda=" + fmt(lambda);

            double max_abs = 0.0, max_rel = 0.0;
            bool all_converged = true;
            for (double s : s_grid) {
                const SeriesValue sv = laplace_series_multi(p, lambda, s);
                if (!sv.converged) {
                    all_converged = false;
                    continue;
                }
                const double q = laplace_quadrature(p, lambda, s, p.alpha_top());
                const double d = std::fabs(sv.value - q);
                max_abs = std::max(max_abs, d);
                max_rel = std::max(max_rel, d / std::max(1e-30, std::fabs(q)));
            }
            VerifyRecord rec;
            rec.id = "laplace-consistency-" + std::to_string(i);
            rec.suite = "laplace";
            rec.params = params;
            rec.grid = s_grid;
            rec.max_abs_residual = max_abs;
            rec.max_rel_residual = max_rel;
            rec.tolerance = 1e-7;
            rec.status = pass_fail(all_converged && max_abs <= 1e-7);
            out.push_back(std::move(rec));
        }
    }

    { // all alpha_j = 1: transform lands on the multi-index Mittag-Leffler value
        for (int i = 0; i < 3; ++i) {
            const double nu1 = draw.uniform(0.5, 2.0);
            const double nu2 = draw.uniform(0.5, 2.0);
            const double lambda = draw.uniform(0.3, 1.0);
            const MultiIndexParams p = MultiIndexParams::make({1.0, 1.0, 1.0}, {nu1, nu2});
            const double pre = gamma(1.0 + p.a[0]) * gamma(1.0 + p.a[1]);
            double max_abs = 0.0, max_rel = 0.0;
            const std::vector<double> s_grid = {2.0, 3.0};
            for (double s : s_grid) {
                const SeriesValue sv = laplace_series_multi(p, lambda, s);
                const double want =
                    pre / s *
                    multi_index_mittag_leffler({1.0, 1.0}, {p.a[1] + 1.0, p.a[2] + 1.0},
                                               lambda / s);
                const double d = std::fabs(sv.value - want);
                max_abs = std::max(max_abs, d);
                max_rel = std::max(max_rel, d / std::fabs(want));
            }
            VerifyRecord rec;
            rec.id = "laplace-hyper-bessel-ml-" + std::to_string(i);
            rec.suite = "laplace";
            rec.params = "n=2, all alpha_j=1, nus=" + fmt(nu1) + "," + fmt(nu2) +
                         ", lambda=" + fmt(lambda);
            rec.grid = s_grid;
            rec.max_abs_residual = max_abs;
            rec.max_rel_residual = max_rel;
            rec.tolerance = 1e-10;
            rec.status = pass_fail(max_rel <= 1e-10);
            out.push_back(std::move(rec));
        }
    }

    { // alpha = 1, argument lambda*x: (1/s) E_{beta,nu}(lambda/(beta s))
        for (int i = 0; i < 3; ++i) {
            const double beta = draw.uniform(0.5, 1.5);
            const double nu = draw.uniform(0.4, 1.8);
            const double lambda = draw.uniform(0.2, 0.9 * std::min(1.0, beta));
            const ThreeParams p(1.0, beta, nu);
            const std::vector<double> s_grid = {2.0, 3.0, 5.0};
            const ThreeParamLaplaceCheck chk = laplace_three_param_check(p, lambda, 1.0, s_grid);
            double max_rel = 0.0, max_abs = 0.0;
            for (std::size_t j = 0; j < s_grid.size(); ++j) {
                const double s = s_grid[j];
                const double want = mittag_leffler(beta, nu, lambda / (beta * s)) / s;
                const double d = std::fabs(chk.reference[j].series_value - want);
                max_abs = std::max(max_abs, d);
                max_rel = std::max(max_rel, d / std::fabs(want));
            }
            VerifyRecord rec;
            rec.id = "laplace-wright-alpha-one-" + std::to_string(i);
            rec.suite = "laplace";
            rec.params = "alpha=1, beta=" + fmt(beta) + ", nu=" + fmt(nu) +
                         ", lambda=" + fmt(lambda) + ", rho=1";
            rec.grid = s_grid;
            rec.max_abs_residual = max_abs;
            rec.max_rel_residual = max_rel;
            rec.tolerance = 1e-10;
            rec.status = pass_fail(max_rel <= 1e-10);
            out.push_back(std::move(rec));
        }
    }

    { // three-way check of the stated n=1 transform (beta factor inside the
      // product) against the general specialization and the quadrature
        const ThreeParams p(0.5, 0.5, 0.5);
        const std::vector<double> s_grid = {2.0, 3.0, 5.0};
        const ThreeParamLaplaceCheck chk = laplace_three_param_check(p, 1.0, 0.5, s_grid);
        double ref_diff = 0.0, cand_diff = 0.0;
        for (std::size_t j = 0; j < s_grid.size(); ++j) {
            ref_diff = std::max(ref_diff, chk.reference[j].abs_diff);
            cand_diff = std::max(cand_diff, chk.candidate[j].abs_diff);
        }
        const std::string base =
            "alpha=0.5, beta=0.5, nu=0.5, lambda=1, rho=0.5; candidate-vs-reference max |diff|=" +
            fmt(chk.max_candidate_vs_reference);

        VerifyRecord ref_rec;
        ref_rec.id = "laplace-three-param-reference";
        ref_rec.suite = "laplace";
        ref_rec.params = base;
        ref_rec.grid = s_grid;
        ref_rec.max_abs_residual = ref_diff;
        ref_rec.max_rel_residual = ref_diff;
        ref_rec.tolerance = 1e-8;
        ref_rec.status = pass_fail(ref_diff <= 1e-8);
        out.push_back(ref_rec);

        VerifyRecord cand_rec;
        cand_rec.id = "laplace-three-param-candidate";
        cand_rec.suite = "laplace";
        cand_rec.params = base + "; quadrature is the arbiter";
        cand_rec.grid = s_grid;
        cand_rec.max_abs_residual = cand_diff;
        cand_rec.max_rel_residual = cand_diff;
        cand_rec.tolerance = 1e-8;
        if (cand_diff <= 1e-8)
            cand_rec.status = "pass";
        else if (ref_diff <= 1e-8)
            cand_rec.status = "erratum-candidate";
        else
            cand_rec.status = "fail";
        out.push_back(cand_rec);
    }

    { // divergence detector: radius-limited case pushed past its radius
        const MultiIndexParams p = ThreeParams(0.0, 0.5, 1.0).to_multi_index();
        const SeriesValue sv = laplace_series_multi(p, 1.0, 0.5);
        VerifyRecord rec;
        rec.id = "laplace-divergence-detector";
        rec.suite = "laplace";
        rec.params = "alpha=0, beta=0.5, nu=1, lambda=1, s=0.5 (|lambda/s^beta| > 1)";
        rec.grid = {0.5};
        rec.max_abs_residual = 0.0;
        rec.max_rel_residual = 0.0;
        rec.tolerance = 0.0;
        rec.status = pass_fail(!sv.converged);
        out.push_back(std::move(rec));
    }
}

// ---- recurrences ----

void suite_recurrences(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 4));
    const std::vector<double> grid = unit_grid(10);
    const int K = 50;

    for (int i = 0; i < 10; ++i) { // main three-member relation
        double alpha, beta, nu;
        do {
            alpha = draw.uniform(0.35, 1.0);
            beta = draw.uniform(0.35, 1.0);
            nu = draw.uniform(0.3, 1.8);
        } while (nu + beta - alpha < 0.05);
        const ThreeParams p(alpha, beta, nu);
        const ResidualReport r = recurrence_residual_main(p, grid, K);
        out.push_back(from_report(r, "recurrence-main-" + std::to_string(i), "recurrences",
                                  "alpha=" + fmt(alpha) + ", beta=" + fmt(beta) +
                                      ", nu=" + fmt(nu) + ", K=" + std::to_string(K),
                                  1e-8));
    }

    for (int i = 0; i < 10; ++i) { // Bessel-Clifford three-term, oracle only
        const int n = draw.integer(0, 6);
        std::vector<double> xs;
        for (int j = 0; j < 5; ++j) xs.push_back(draw.uniform(0.01, 2.0));
        const ResidualReport r = recurrence_residual_bessel_clifford(n, xs);
        out.push_back(from_report(r, "recurrence-bessel-clifford-" + std::to_string(i),
                                  "recurrences", "n=" + std::to_string(n), 1e-8));
    }

    for (int i = 0; i < 10; ++i) { // Wright shifts (fractional + first derivative)
        double lambda, nu;
        do {
            lambda = draw.uniform(0.3, 0.95);
            nu = draw.uniform(0.3, 1.8);
        } while (lambda + nu < 1.05);
        const WrightRecurrenceReports r = recurrence_residual_wright(lambda, nu, grid, K);
        const std::string params =
            "lambda=" + fmt(lambda) + ", nu=" + fmt(nu) + ", K=" + std::to_string(K);
        out.push_back(from_report(r.fractional, "recurrence-wright-fractional-" +
                                                    std::to_string(i),
                                  "recurrences", params, 1e-8));
        out.push_back(from_report(r.first_derivative,
                                  "recurrence-wright-first-derivative-" + std::to_string(i),
                                  "recurrences", params, 1e-8));
    }

    for (int i = 0; i < 10; ++i) { // Mittag-Leffler three-term form + evidence
        double alpha, beta;
        do {
            alpha = draw.uniform(0.3, 0.95);
            beta = draw.uniform(0.4, 1.8);
        } while (alpha + beta < 1.05 || std::fabs(beta - alpha) < 0.05 ||
                 is_nonpositive_integer(beta - alpha));
        const std::string params =
            "alpha=" + fmt(alpha) + ", beta=" + fmt(beta) + ", K=" + std::to_string(K);

        const ResidualReport three = recurrence_residual_mittag_leffler(alpha, beta, grid, K);
        const ResidualReport gap =
            mittag_leffler_recurrence_leftover_gap(alpha, beta, grid, K);
        const ResidualReport two = mittag_leffler_recurrence_two_term(alpha, beta, grid, K);

        // The three-term form as stated misses its tolerance by the
        // surviving k=0 boundary term; when both evidence checks confirm
        // that reading (residual == z^{beta-1}/Gamma(beta-alpha) up to
        // truncation, and the two-term identity is exact) the record is a
        // documented erratum finding, not a failure.
        VerifyRecord rec = from_report(three, "recurrence-mittag-leffler-three-term-" +
                                                  std::to_string(i),
                                       "recurrences", params, 1e-8);
        if (rec.status == "fail" && gap.pass && two.pass) {
            rec.status = "erratum-candidate";
            rec.params += "; residual matches z^(beta-1)/Gamma(beta-alpha) to " +
                          fmt(gap.max_abs_residual) + "; two-term residual " +
                          fmt(two.max_abs_residual);
        }
        out.push_back(std::move(rec));
        out.push_back(from_report(gap, "recurrence-mittag-leffler-leftover-gap-" +
                                           std::to_string(i),
                                  "recurrences", params, 1e-8));
        out.push_back(from_report(two, "recurrence-mittag-leffler-two-term-" +
                                           std::to_string(i),
                                  "recurrences", params, 1e-8));
    }
}

// ---- param-derivs ----

// P_k / Gamma(beta k + 1 - alpha + nu) weighted coefficient of the selected
// derivative series, assembled the way the series does it; used for the
// coefficient-level reduction identities below.
struct DerivativeCoefficients {
    std::vector<double> nu, alpha_plus_nu, beta;
};

DerivativeCoefficients derivative_coefficients(double alpha, double beta, double nu,
                                               int k_max) {
    DerivativeCoefficients out;
    double log_p = 0.0;
    int sign_p = 1;
    double sum_num = 0.0;
    double sum_wnum = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            const SignedLogGamma lgn = log_gamma_signed(beta * k + 1.0 - alpha);
            const SignedLogGamma lgd = log_gamma_signed(beta * k + 1.0);
            log_p += lgn.log_abs - lgd.log_abs;
            sign_p *= lgn.sign * lgd.sign;
            const double psi_num = digamma(beta * k + 1.0 - alpha);
            sum_num += psi_num;
            sum_wnum += k * (psi_num - digamma(beta * k + 1.0));
        }
        const double gk = beta * k + 1.0 - alpha + nu;
        const SignedLogGamma lgg = log_gamma_signed(gk);
        const double base = sign_p * lgg.sign * std::exp(log_p - lgg.log_abs);
        const double psig = digamma(gk);
        out.nu.push_back(-psig * base);
        out.alpha_plus_nu.push_back(-sum_num * base);
        out.beta.push_back((sum_wnum - k * psig) * base);
    }
    return out;
}

void suite_param_derivs(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 5));

    for (int i = 0; i < 10; ++i) { // finite-difference oracle, h = 1e-5
        const ParamTag which =
            (i % 3 == 0) ? ParamTag::alpha : (i % 3 == 1) ? ParamTag::beta : ParamTag::nu;
        const char* which_name = (i % 3 == 0) ? "alpha" : (i % 3 == 1) ? "beta" : "nu";
        const double alpha = draw.uniform(0.1, 0.9);
        const double beta = draw.uniform(0.4, 1.5);
        const double nu = draw.uniform(0.2, 1.5);
        const double z = draw.uniform(-1.0, 1.0);
        const ThreeParams p(alpha, beta, nu);
        const ResidualReport r = param_derivative_fd_check(p, which, z, 1e-5);
        out.push_back(from_report(r,
                                  std::string("param-derivative-fd-") + which_name + "-" +
                                      std::to_string(i),
                                  "param-derivs",
                                  "alpha=" + fmt(alpha) + ", beta=" + fmt(beta) +
                                      ", nu=" + fmt(nu) + ", z=" + fmt(z) + ", h=1e-5",
                                  1e-6));
    }

    const int k_max = 30;
    const double coeff_tol = 1e-12;

    for (int i = 0; i < 3; ++i) { // alpha=1 reduction of the nu-derivative series
        const double beta = draw.uniform(0.4, 1.5);
        const double nu = draw.uniform(0.3, 1.8);
        const DerivativeCoefficients dc = derivative_coefficients(1.0, beta, nu, k_max);
        double max_rel = 0.0;
        double lg_fact = 0.0;
        for (int k = 0; k <= k_max; ++k) {
            if (k > 0) lg_fact += std::log(static_cast<double>(k));
            const double g = beta * k + nu;
            const double want =
                -digamma(g) * std::exp(-k * std::log(beta) - lg_fact -
                                       log_gamma_signed(g).log_abs);
            const double have = dc.nu[static_cast<std::size_t>(k)];
            max_rel = std::max(max_rel,
                               std::fabs(have - want) / std::max(1e-30, std::fabs(want)));
        }
        VerifyRecord rec;
        rec.id = "apelblat-mainardi-coefficients-" + std::to_string(i);
        rec.suite = "param-derivs";
        rec.params = "alpha=1, beta=" + fmt(beta) + ", nu=" + fmt(nu) + ", k<=30";
        rec.max_abs_residual = max_rel;
        rec.max_rel_residual = max_rel;
        rec.tolerance = coeff_tol;
        rec.status = pass_fail(max_rel <= coeff_tol);
        out.push_back(std::move(rec));
    }

    for (int i = 0; i < 3; ++i) { // alpha=0 reduction onto E_{beta,nu+1} derivatives
        const double beta = draw.uniform(0.4, 1.5);
        const double nu = draw.uniform(0.3, 1.8);
        const DerivativeCoefficients dc = derivative_coefficients(0.0, beta, nu, k_max);
        double max_rel = 0.0;
        for (int k = 0; k <= k_max; ++k) {
            const double g = beta * k + nu + 1.0;
            const double rg = reciprocal_gamma(g);
            const double want_beta = -k * digamma(g) * rg; // d/d(first index) of E
            const double want_nu = -digamma(g) * rg;       // d/d(second index) of E
            max_rel = std::max(
                max_rel, std::fabs(dc.beta[static_cast<std::size_t>(k)] - want_beta) /
                             std::max(1.0, std::fabs(want_beta)));
            max_rel = std::max(
                max_rel, std::fabs(dc.nu[static_cast<std::size_t>(k)] - want_nu) /
                             std::max(1e-30, std::fabs(want_nu)));
        }
        VerifyRecord rec;
        rec.id = "apelblat-coefficients-" + std::to_string(i);
        rec.suite = "param-derivs";
        rec.params = "alpha=0, beta=" + fmt(beta) + ", nu=" + fmt(nu) + ", k<=30";
        rec.max_abs_residual = max_rel;
        rec.max_rel_residual = max_rel;
        rec.tolerance = coeff_tol;
        rec.status = pass_fail(max_rel <= coeff_tol);
        out.push_back(std::move(rec));
    }

    for (int i = 0; i < 3; ++i) { // alpha- and nu-bracket internal consistency
        const double alpha = draw.uniform(0.1, 0.9);
        const double beta = draw.uniform(0.4, 1.5);
        const double nu = draw.uniform(0.3, 1.8);
        const DerivativeCoefficients dc = derivative_coefficients(alpha, beta, nu, k_max);
        double max_rel = 0.0;
        double log_p = 0.0;
        int sign_p = 1;
        double sum_num = 0.0;
        for (int k = 0; k <= k_max; ++k) {
            if (k > 0) {
                const SignedLogGamma lgn = log_gamma_signed(beta * k + 1.0 - alpha);
                const SignedLogGamma lgd = log_gamma_signed(beta * k + 1.0);
                log_p += lgn.log_abs - lgd.log_abs;
                sign_p *= lgn.sign * lgd.sign;
                sum_num += digamma(beta * k + 1.0 - alpha);
            }
            const SignedLogGamma lgg = log_gamma_signed(beta * k + 1.0 - alpha + nu);
            const double want = -sum_num * sign_p * lgg.sign * std::exp(log_p - lgg.log_abs);
            const double have = dc.alpha_plus_nu[static_cast<std::size_t>(k)];
            max_rel = std::max(max_rel,
                               std::fabs(have - want) / std::max(1.0, std::fabs(want)));
        }
        VerifyRecord rec;
        rec.id = "derivative-bracket-consistency-" + std::to_string(i);
        rec.suite = "param-derivs";
        rec.params = "alpha=" + fmt(alpha) + ", beta=" + fmt(beta) + ", nu=" + fmt(nu) +
                     ", k<=30";
        rec.max_abs_residual = max_rel;
        rec.max_rel_residual = max_rel;
        rec.tolerance = coeff_tol;
        rec.status = pass_fail(max_rel <= coeff_tol);
        out.push_back(std::move(rec));
    }
}

// ---- appendix ----

void suite_appendix(std::uint64_t seed, std::vector<VerifyRecord>& out) {
    DrawStream draw(suite_seed(seed, 6));
    const double tol = 1e-12;

    auto random_gps = [&](double offset_lo, double offset_hi) {
        const double offset = draw.uniform(offset_lo, offset_hi);
        const double step = draw.uniform(0.2, 1.2);
        std::vector<double> coeffs;
        for (int k = 0; k < 6; ++k) coeffs.push_back(draw.uniform(-2.0, 2.0));
        return make_gps(offset, step, coeffs);
    };

    auto compare = [&](const GeneralizedPowerSeries& a, const GeneralizedPowerSeries& b) {
        double worst = std::fabs(a.offset - b.offset) + std::fabs(a.step - b.step);
        const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t k = 0; k < n; ++k) {
            const double ca = k < a.coeffs.size() ? a.coeffs[k] : 0.0;
            const double cb = k < b.coeffs.size() ? b.coeffs[k] : 0.0;
            worst = std::max(worst, std::fabs(ca - cb) / std::max(1.0, std::fabs(cb)));
        }
        return worst;
    };

    auto push = [&](const char* id_base, int i, const std::string& params, double worst) {
        VerifyRecord rec;
        rec.id = std::string(id_base) + "-" + std::to_string(i);
        rec.suite = "appendix";
        rec.params = params;
        rec.max_abs_residual = worst;
        rec.max_rel_residual = worst;
        rec.tolerance = tol;
        rec.status = pass_fail(worst <= tol);
        out.push_back(std::move(rec));
    };

    for (int i = 0; i < 5; ++i) { // J^g1 J^g2 = J^{g1+g2}
        const GeneralizedPowerSeries s = random_gps(-0.5, 1.5);
        const double g1 = draw.uniform(0.1, 1.2);
        const double g2 = draw.uniform(0.1, 1.2);
        const double worst =
            compare(rl_integral(rl_integral(s, g1), g2), rl_integral(s, g1 + g2));
        push("appendix-semigroup", i,
             "offset=" + fmt(s.offset) + ", step=" + fmt(s.step) + ", g1=" + fmt(g1) +
                 ", g2=" + fmt(g2),
             worst);
    }

    for (int i = 0; i < 5; ++i) { // D^g J^g = identity
        const GeneralizedPowerSeries s = random_gps(0.05, 1.2);
        const double g = draw.uniform(0.1, 1.0);
        const double worst = compare(caputo_derivative(rl_integral(s, g), g), s);
        push("appendix-left-inverse", i,
             "offset=" + fmt(s.offset) + ", step=" + fmt(s.step) + ", g=" + fmt(g), worst);
    }

    for (int i = 0; i < 5; ++i) { // J^g D^g = identity minus the constant term
        GeneralizedPowerSeries s = random_gps(0.0, 0.0);
        s.offset = 0.0; // exact constant slot at exponent 0
        const double g = draw.uniform(0.1, 0.95);
        const GeneralizedPowerSeries back = rl_integral(caputo_derivative(s, g), g);
        GeneralizedPowerSeries want = s;
        want.coeffs[0] = 0.0;
        const double worst = compare(back, want);
        push("appendix-initial-value", i, "step=" + fmt(s.step) + ", g=" + fmt(g), worst);
    }

    for (int i = 0; i < 5; ++i) { // power-law rules against direct gamma ratios
        const double p = draw.uniform(0.3, 2.5);
        const double c = draw.uniform(-2.0, 2.0);
        const double g = draw.uniform(0.1, 0.95);
        const GeneralizedPowerSeries mono = make_gps(p, 1.0, {c});
        const GeneralizedPowerSeries dm = caputo_derivative(mono, g);
        const GeneralizedPowerSeries jm = rl_integral(mono, g);
        const double want_d = c * gamma(p + 1.0) / gamma(p + 1.0 - g);
        const double want_j = c * gamma(p + 1.0) / gamma(p + 1.0 + g);
        double worst = std::fabs(dm.coeffs[0] - want_d) / std::max(1.0, std::fabs(want_d));
        worst = std::max(worst,
                         std::fabs(jm.coeffs[0] - want_j) / std::max(1.0, std::fabs(want_j)));
        worst = std::max(worst, std::fabs(dm.offset - (p - g)));
        worst = std::max(worst, std::fabs(jm.offset - (p + g)));
        push("appendix-power-law", i, "p=" + fmt(p) + ", c=" + fmt(c) + ", g=" + fmt(g),
             worst);
    }
}

} // namespace

VerifyOutcome run_verification(const VerifyOptions& options) {
    static const std::vector<std::string> known = {"reductions", "eigen",        "laplace",
                                                   "recurrences", "param-derivs", "appendix"};
    if (!options.suite.empty() &&
        std::find(known.begin(), known.end(), options.suite) == known.end()) {
        std::string msg = "run_verification: unknown suite '" + options.suite + "'; expected";
        for (const std::string& s : known) msg += " " + s;
        throw domain_error(msg);
    }

    VerifyOutcome out;
    out.seed = options.seed;
    auto want = [&](const char* name) {
        return options.suite.empty() || options.suite == name;
    };
    if (want("reductions")) suite_reductions(options.seed, out.records);
    if (want("eigen")) suite_eigen(options.seed, out.records);
    if (want("laplace")) suite_laplace(options.seed, out.records);
    if (want("recurrences")) suite_recurrences(options.seed, out.records);
    if (want("param-derivs")) suite_param_derivs(options.seed, out.records);
    if (want("appendix")) suite_appendix(options.seed, out.records);

    for (const VerifyRecord& r : out.records)
        if (r.status == "fail") ++out.failures;
    return out;
}

} // namespace wrightmi
