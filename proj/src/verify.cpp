#include "ratiostat/verify.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ratiostat/estimator.hpp"
#include "ratiostat/montecarlo.hpp"
#include "ratiostat/rv_analysis.hpp"
#include "ratiostat/samplers.hpp"
#include "ratiostat/special_functions.hpp"
#include "ratiostat/statistics.hpp"
#include "ratiostat/tolerances.hpp"

namespace ratiostat {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

struct Collector {
    const VerifyOptions& options;
    std::vector<VerifyCheck> checks;

    bool wants(const char* suite) const {
        return !options.suite || *options.suite == suite;
    }

    void add(const char* suite, std::string name, double measured, double target,
             double tolerance) {
        const double tol_eff = options.tol ? *options.tol : tolerance;
        checks.push_back(VerifyCheck{suite, std::move(name), measured, target,
                                     tol_eff,
                                     std::abs(measured - target) <= tol_eff});
    }
};

void suite_levy(Collector& col) {
    struct Cell {
        double beta, alpha;
    };
    std::vector<Cell> grid;
    if (col.options.beta || col.options.alpha) {
        grid.push_back(Cell{col.options.beta.value_or(0.5),
                            col.options.alpha.value_or(2.0)});
    } else {
        grid = {{0.25, 2.0}, {0.5, 2.0}, {0.75, 2.0}, {0.25, 1.5}, {0.5, 1.5}};
    }
    const int R = col.options.levy_replicates > 0 ? col.options.levy_replicates
                                                  : tol::kLevyReplicates;
    for (const Cell& cell : grid) {
        const BetaIdx beta(cell.beta);
        const Alpha alpha(cell.alpha);
        const McEstimate est = mc_levy_ratio(beta, alpha, R, tol::kLevyTruncTol,
                                             col.options.seed, col.options.threads);
        col.add("levy", fmt("levy beta=%g alpha=%g", cell.beta, cell.alpha),
                est.mean, gamma_map(alpha, beta).value,
                3.0 * est.std_error + tol::kLevyBiasSlack);
    }
}

void suite_mellin(Collector& col) {
    const TailFunction pareto = pareto_tail(0.5);
    for (double a : {1.5, 2.0}) {
        const Alpha alpha(a);
        const double target =
            1.0 / (gamma_map(alpha, BetaIdx(0.5)).value * (a - 1.0));
        const double measured = mellin_conv_ratio(pareto, alpha, 1e6);
        col.add("mellin", fmt("mellin pareto(0.5) alpha=%g x=1e6", a), measured,
                target, tol::kMellinRelPareto * target);
    }
    const double slow = mellin_conv_ratio(slowvary_tail(), Alpha(2.0), 1e10);
    col.add("mellin", "mellin slowvary alpha=2 x=1e10", slow, 1.0,
            tol::kMellinRelSlowVary);
}

void suite_karamata(Collector& col) {
    const double measured = karamata_ratio(pareto_tail(0.5), Alpha(2.0), 1e6);
    col.add("karamata", "karamata pareto(0.5) alpha=2 x=1e6", measured, 1.5,
            tol::kKaramataRel * 1.5);
    const double control = karamata_ratio(exponential_tail(), Alpha(2.0), 50.0);
    col.add("karamata", "karamata exp control x=50", control, 0.0,
            tol::kKaramataExpCeiling);
}

void suite_cf(Collector& col) {
    const double t_small[] = {0.01};
    const RatioCurve rad = cf_condition_ratio(DistSpecX{RademacherX{}}, 2.0, t_small);
    col.add("cf-condition", "cf rademacher t=0.01", rad.values[0], 0.5,
            tol::kCfRademacherAbs);
    const double t_grid[] = {0.01, 0.05, 0.1, 0.2, 0.5};
    const RatioCurve sym =
        cf_condition_ratio(DistSpecX{SymStableX{1.5, 1.0}}, 1.5, t_grid);
    double worst = sym.values[0];
    for (double v : sym.values)
        if (std::abs(v - 1.0) > std::abs(worst - 1.0)) worst = v;
    col.add("cf-condition", "cf symstable(1.5) closed form", worst, 1.0,
            tol::kCfSymStableAbs);
}

void suite_tail(Collector& col) {
    RngStream stream = substream(col.options.seed ^ 0x7461696cULL, 0);
    const std::vector<double> draws =
        sample_x(DistSpecX{SymStableX{1.5, 1.0}}, 10000000, stream);
    const double x_grid[] = {10.0, 20.0};
    const RatioCurve curve = tail_vs_constant(draws, 1.5, 1.0, x_grid);
    for (std::size_t i = 0; i < curve.values.size(); ++i)
        col.add("tail-constant", fmt("tail symstable(1.5) x=%g", x_grid[i]),
                curve.values[i], 1.0, tol::kTailBandRel);
}

void suite_sandwich(Collector& col) {
    RngStream stream = substream(col.options.seed ^ 0x73616e64ULL, 0);
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double alpha = 1.0 + stream.uniform();  // (1, 2)
        const std::size_t n = 1 + static_cast<std::size_t>(stream.uniform() * 100);
        const double beta = 0.05 + 0.9 * stream.uniform();
        const DistSpecY spec = ParetoY{beta, 1.0};
        const std::vector<double> y = sample_y(spec, n, stream);
        const double s = stat_s_n(y, alpha);
        const double d = stat_d_max(y);
        const double lo = std::pow(d, alpha);
        const double hi = std::pow(d, alpha - 1.0);
        if (s < lo * (1.0 - 1e-12) || s > hi * (1.0 + 1e-12)) ++violations;
    }
    col.add("sandwich", "sandwich violations (1e4 random samples)",
            static_cast<double>(violations), 0.0, 0.0);
}

}  // namespace

std::vector<VerifyCheck> run_verify(const VerifyOptions& options) {
    if (options.suite && *options.suite != "levy" && *options.suite != "mellin" &&
        *options.suite != "karamata" && *options.suite != "cf-condition" &&
        *options.suite != "tail-constant" && *options.suite != "sandwich")
        throw std::invalid_argument("verify: unknown suite '" + *options.suite + "'");
    Collector col{options, {}};
    if (col.wants("levy")) suite_levy(col);
    if (col.wants("mellin")) suite_mellin(col);
    if (col.wants("karamata")) suite_karamata(col);
    if (col.wants("cf-condition")) suite_cf(col);
    if (col.wants("tail-constant")) suite_tail(col);
    if (col.wants("sandwich")) suite_sandwich(col);
    return col.checks;
}

}  // namespace ratiostat
