#include "ratiostat/rv_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "ratiostat/statistics.hpp"

namespace ratiostat {

namespace {

using Integrand = std::function<double(double)>;

[[noreturn]] void quadrature_failure(const char* where) {
    throw std::runtime_error(std::string(where) + ": quadrature did not converge");
}

void check_converged(double err, double l1, const char* where) {
    if (!(err <= 1e-6 * (l1 + 1e-300))) quadrature_failure(where);
}

struct PieceResult {
    double value = 0.0;
    double err = 0.0;
    double l1 = 0.0;
    PieceResult& operator+=(const PieceResult& o) {
        value += o.value;
        err += o.err;
        l1 += o.l1;
        return *this;
    }
};

// Finite piece.  tanh_sinh absorbs endpoint behavior; intervals spanning
// many decades are integrated in log u instead, where power-law integrands
// become exponentials.
PieceResult integrate_piece(const Integrand& f, double a, double b, double tol) {
    thread_local boost::math::quadrature::tanh_sinh<double> ts;
    PieceResult r;
    if (a > 0.0 && b > 100.0 * a) {
        r.value = ts.integrate(
            [&](double z) {
                const double u = std::exp(z);
                return f(u) * u;
            },
            std::log(a), std::log(b), tol, &r.err, &r.l1);
    } else {
        r.value = ts.integrate(f, a, b, tol, &r.err, &r.l1);
    }
    return r;
}

// Sorts breakpoints and merges any pair closer than 1e-10 relative.  A piece
// that narrow has too few representable doubles for tanh_sinh to refine, and
// dropping it misstates the integral by at most 1e-10 of the local scale; a
// kink that close to a neighboring piece's endpoint is resolved by the
// endpoint clustering of the nodes.  The last point survives a merge so that
// the domain end (or the handoff to the tail integral) stays where the
// caller put it.
void collapse_breakpoints(std::vector<double>& pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<double> keep{pts.front()};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] - keep.back() > 1e-10 * pts[i])
            keep.push_back(pts[i]);
        else if (i + 1 == pts.size())
            keep.back() = pts[i];
    }
    pts = std::move(keep);
}

// Finite interval split at interior breakpoints.  Convergence is judged on
// the accumulated error against the accumulated L1 mass, so a piece whose
// contribution is negligible cannot fail the whole integral on its own
// rounding noise.
double integrate_pieces(const Integrand& f, std::vector<double> pts, double tol,
                        const char* where) {
    collapse_breakpoints(pts);
    PieceResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate_piece(f, pts[i], pts[i + 1], tol);
    check_converged(total.err, total.l1, where);
    return total.value;
}

// integral over (0, inf) of an integrand damped like exp(-decay_rate * u),
// split at the supplied breakpoints (kinks of Gbar, decay scale).
double integrate_semi_infinite(const Integrand& f, std::vector<double> knots,
                               double decay_rate, double tol, const char* where) {
    const double cutoff = 745.0 / decay_rate;  // exp(-745) underflows
    std::vector<double> pts{0.0};
    for (double k : knots)
        if (std::isfinite(k) && k > 0.0 && k < cutoff) pts.push_back(k);
    collapse_breakpoints(pts);
    PieceResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate_piece(f, pts[i], pts[i + 1], tol);
    thread_local boost::math::quadrature::exp_sinh<double> es;
    PieceResult tail;
    tail.value = es.integrate(f, pts.back(),
                              std::numeric_limits<double>::infinity(), tol,
                              &tail.err, &tail.l1);
    total += tail;
    check_converged(total.err, total.l1, where);
    return total.value;
}

void check_grid(std::span<const double> grid, const char* where) {
    if (grid.empty()) throw std::invalid_argument(std::string(where) + ": empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            throw std::invalid_argument(std::string(where) + ": grid values must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument(std::string(where) + ": grid must be strictly increasing");
    }
}

std::string format_param(const char* family, double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s:%g", family, p);
    return buf;
}

}  // namespace

TailFunction pareto_tail(double beta, double xmin) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("pareto_tail: require 0 < beta < 1");
    if (!(xmin > 0.0)) throw std::invalid_argument("pareto_tail: require xmin > 0");
    return TailFunction{
        [beta, xmin](double u) { return u <= xmin ? 1.0 : std::pow(u / xmin, -beta); },
        xmin, format_param("pareto", beta)};
}

TailFunction slowvary_tail() {
    const double e = std::numbers::e;
    return TailFunction{
        [e](double u) { return u <= e ? 1.0 : 1.0 / std::log(u); }, e, "slowvary"};
}

TailFunction exponential_tail(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential_tail: require rate > 0");
    return TailFunction{
        [rate](double u) { return u <= 0.0 ? 1.0 : std::exp(-rate * u); },
        0.0, format_param("exp", rate)};
}

TailFunction unit_tail() {
    return TailFunction{[](double) { return 1.0; },
                        std::numeric_limits<double>::infinity(), "one"};
}

double laplace_f(const TailFunction& gbar, Alpha alpha, double t, double rel_tol) {
    if (!(t > 0.0)) throw std::domain_error("laplace_f: require t > 0");
    const double a = alpha.value;
    const Integrand f = [&](double u) {
        return gbar.evaluate(u) * std::pow(u, a - 1.0) * std::exp(-u * t);
    };
    return integrate_semi_infinite(f, {gbar.support_low, 1.0 / t}, t, rel_tol,
                                   "laplace_f");
}

double g_infinity(const TailFunction& gbar, Alpha alpha, double x, double rel_tol) {
    if (!(x > 0.0)) throw std::domain_error("g_infinity: require x > 0");
    const double a = alpha.value;
    const Integrand f = [&](double u) {
        return gbar.evaluate(u * x) * std::pow(u, a - 1.0) * std::exp(-u);
    };
    return integrate_semi_infinite(f, {gbar.support_low / x, 1.0}, 1.0, rel_tol,
                                   "g_infinity");
}

double mellin_conv_ratio(const TailFunction& gbar, Alpha alpha, double x,
                         double rel_tol) {
    if (!(x > 0.0)) throw std::domain_error("mellin_conv_ratio: require x > 0");
    const double a = alpha.value;
    const double inner_tol = std::min(rel_tol, 1e-9);
    const double gx = g_infinity(gbar, alpha, x, inner_tol);
    // (1, 2]: u = 1 + s^(1/(alpha-1)) turns (u-1)^(alpha-2) du into
    // ds/(alpha-1), leaving a bounded integrand on (0, 1].
    const double p = 1.0 / (a - 1.0);
    const double near = integrate_pieces(
                            [&](double s) {
                                const double u = 1.0 + std::pow(s, p);
                                return std::pow(u, -a) * g_infinity(gbar, alpha, x / u, inner_tol);
                            },
                            {0.0, 1.0}, rel_tol, "mellin_conv_ratio") *
                        p;
    // (2, inf): w = 1/u collapses the kernel to (1-w)^(alpha-2) on (0, 1/2].
    // g_infinity(x w) turns over at w ~ 1/x.  Splitting a factor 32 below
    // that scale leaves the first piece constant to ~e^-32 and puts the
    // whole turnover inside the log-substituted piece, where it is broad.
    const double far = integrate_pieces(
        [&](double w) {
            return std::pow(1.0 - w, a - 2.0) * g_infinity(gbar, alpha, x * w, inner_tol);
        },
        {0.0, std::min(1.0 / (32.0 * x), 0.25), 0.5}, rel_tol, "mellin_conv_ratio");
    return (near + far) / gx;
}

double karamata_ratio(const TailFunction& gbar, Alpha alpha, double x,
                      double rel_tol) {
    if (!(x > 0.0)) throw std::domain_error("karamata_ratio: require x > 0");
    const double a = alpha.value;
    const double s = gbar.support_low;
    if (x <= s) {
        // Gbar == 1 on (0, x]: U(x) = x^alpha / alpha and the powers cancel.
        return a * gbar.evaluate(x);
    }
    double u_val = 0.0;
    if (s > 0.0) u_val = std::pow(s, a) / a;
    u_val += integrate_pieces(
        [&](double u) { return gbar.evaluate(u) * std::pow(u, a - 1.0); },
        {std::max(s, 0.0), x}, rel_tol, "karamata_ratio");
    return std::pow(x, a) * gbar.evaluate(x) / u_val;
}

RatioCurve cf_condition_ratio(const DistSpecX& xspec, double alpha,
                              std::span<const double> t_grid) {
    validate_spec(xspec);
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::domain_error("cf_condition_ratio: require 1 < alpha <= 2");
    check_grid(t_grid, "cf_condition_ratio");
    RatioCurve curve;
    curve.abscissae.assign(t_grid.begin(), t_grid.end());
    curve.values.resize(t_grid.size());
    // Closed forms for -log Re phi of each family.
    std::function<double(double)> neg_log_re;
    if (const auto* p = std::get_if<NormalX>(&xspec)) {
        const double s2 = p->sigma * p->sigma;
        neg_log_re = [s2](double t) { return 0.5 * s2 * t * t; };
        curve.target = 0.5 * s2;
    } else if (std::get_if<RademacherX>(&xspec)) {
        neg_log_re = [](double t) { return -std::log(std::cos(t)); };
        curve.target = 0.5;
    } else {
        const auto& p = std::get<SymStableX>(xspec);
        neg_log_re = [&p](double t) { return std::pow(p.scale * t, p.alpha); };
        curve.target = std::pow(p.scale, p.alpha);
    }
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        const double t = t_grid[i];
        curve.values[i] = neg_log_re(t) / std::pow(t, alpha);
    }
    return curve;
}

RatioCurve cf_condition_ratio(std::span<const double> sample, double alpha,
                              std::span<const double> t_grid) {
    if (sample.empty())
        throw std::invalid_argument("cf_condition_ratio: empty sample");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::domain_error("cf_condition_ratio: require 1 < alpha <= 2");
    check_grid(t_grid, "cf_condition_ratio");
    RatioCurve curve;
    curve.abscissae.assign(t_grid.begin(), t_grid.end());
    curve.values.resize(t_grid.size());
    curve.target = std::numeric_limits<double>::quiet_NaN();  // c unknown for raw data
    std::vector<double> cosines(sample.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        for (std::size_t j = 0; j < sample.size(); ++j)
            cosines[j] = std::cos(t * sample[j]);
        const double re = compensated_sum(cosines) / static_cast<double>(sample.size());
        if (!(re > 0.0)) {
            char msg[96];
            std::snprintf(msg, sizeof(msg),
                          "cf_condition_ratio: empirical cf nonpositive at t=%g", t);
            throw std::runtime_error(msg);
        }
        curve.values[i] = -std::log(re) / std::pow(t, alpha);
    }
    return curve;
}

RatioCurve tail_vs_constant(std::span<const double> sample, double alpha,
                            double c, std::span<const double> x_grid) {
    if (sample.empty()) throw std::invalid_argument("tail_vs_constant: empty sample");
    const double constant = tail_constant(alpha, c);  // validates alpha, c
    check_grid(x_grid, "tail_vs_constant");
    RatioCurve curve;
    curve.abscissae.assign(x_grid.begin(), x_grid.end());
    curve.values.resize(x_grid.size());
    curve.target = 1.0;
    const double n = static_cast<double>(sample.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        std::size_t count = 0;
        for (double v : sample)
            if (std::abs(v) > x) ++count;
        if (count < 50) {
            char msg[96];
            std::snprintf(msg, sizeof(msg),
                          "tail_vs_constant: fewer than 50 exceedances at x=%g", x);
            throw std::runtime_error(msg);
        }
        curve.values[i] =
            static_cast<double>(count) / n * std::pow(x, alpha) / constant;
    }
    return curve;
}

}  // namespace ratiostat
