#include "ratiostat/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ratiostat {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Kanter's transform for the one-sided strictly beta-stable law with
// Laplace transform exp(-t^beta): with theta uniform on (0,pi) and w a
// rate-1 exponential,
//   Y = (A(theta)/w)^((1-beta)/beta),
//   A(theta) = sin(beta*theta)^(beta/(1-beta)) * sin((1-beta)*theta)
//              / sin(theta)^(1/(1-beta)).
// Evaluated in logs; returns log Y.
double kanter_log(double beta, RngStream& stream) {
    const double theta = kPi * stream.uniform();
    const double w = stream.exponential();
    const double log_a = (beta / (1.0 - beta)) * std::log(std::sin(beta * theta)) +
                         std::log(std::sin((1.0 - beta) * theta)) -
                         (1.0 / (1.0 - beta)) * std::log(std::sin(theta));
    return ((1.0 - beta) / beta) * (log_a - std::log(w));
}

// Chambers-Mallows-Stuck form for the symmetric alpha-stable law with
// characteristic function exp(-(scale*|t|)^alpha), alpha in (1,2).
double cms_symmetric(double alpha, double scale, RngStream& stream) {
    const double theta = kPi * (stream.uniform() - 0.5);
    const double w = stream.exponential();
    const double x = std::sin(alpha * theta) /
                     std::pow(std::cos(theta), 1.0 / alpha) *
                     std::pow(std::cos((1.0 - alpha) * theta) / w,
                              (1.0 - alpha) / alpha);
    return scale * x;
}

}  // namespace

void validate_spec(const DistSpecY& spec) {
    if (const auto* p = std::get_if<ParetoY>(&spec)) {
        require(p->beta > 0.0 && p->beta < 1.0, "pareto: require 0 < beta < 1");
        require(p->xmin > 0.0, "pareto: require xmin > 0");
    } else if (const auto* p = std::get_if<PositiveStableY>(&spec)) {
        require(p->beta > 0.0 && p->beta < 1.0, "posstable: require 0 < beta < 1");
    } else if (const auto* p = std::get_if<ExponentialY>(&spec)) {
        require(p->rate > 0.0, "exp: require rate > 0");
    }
}

void validate_spec(const DistSpecX& spec) {
    if (const auto* p = std::get_if<NormalX>(&spec)) {
        require(p->sigma > 0.0, "normal: require sigma > 0");
    } else if (const auto* p = std::get_if<SymStableX>(&spec)) {
        require(p->alpha > 1.0 && p->alpha < 2.0,
                "symstable: require 1 < alpha < 2");
        require(p->scale > 0.0, "symstable: require scale > 0");
    }
}

std::vector<double> sample_y(const DistSpecY& spec, std::size_t n, RngStream& stream) {
    std::vector<double> out = sample_y_log(spec, n, stream);
    for (double& v : out) v = std::exp(v);
    return out;
}

std::vector<double> sample_y_log(const DistSpecY& spec, std::size_t n, RngStream& stream) {
    validate_spec(spec);
    if (n == 0) throw std::invalid_argument("sample_y: require n >= 1");
    std::vector<double> out(n);
    if (const auto* p = std::get_if<ParetoY>(&spec)) {
        // Inverse transform: Y = xmin * U^(-1/beta).
        const double log_xmin = std::log(p->xmin);
        for (double& v : out)
            v = log_xmin - std::log(stream.uniform()) / p->beta;
    } else if (std::get_if<SlowVaryY>(&spec)) {
        for (double& v : out) v = 1.0 / stream.uniform();
    } else if (const auto* p = std::get_if<PositiveStableY>(&spec)) {
        for (double& v : out) v = kanter_log(p->beta, stream);
    } else {
        const auto& e = std::get<ExponentialY>(spec);
        for (double& v : out)
            v = std::log(stream.exponential() / e.rate);
    }
    return out;
}

std::vector<double> sample_x(const DistSpecX& spec, std::size_t n, RngStream& stream) {
    validate_spec(spec);
    if (n == 0) throw std::invalid_argument("sample_x: require n >= 1");
    std::vector<double> out(n);
    if (const auto* p = std::get_if<NormalX>(&spec)) {
        for (double& v : out) v = p->sigma * stream.normal();
    } else if (std::get_if<RademacherX>(&spec)) {
        for (double& v : out) v = stream.uniform() < 0.5 ? -1.0 : 1.0;
    } else {
        const auto& st = std::get<SymStableX>(spec);
        for (double& v : out) v = cms_symmetric(st.alpha, st.scale, stream);
    }
    return out;
}

LevyPair sample_levy_pair(BetaIdx beta, Alpha alpha, double tol, RngStream& stream) {
    if (!(beta.value > 0.0))
        throw std::invalid_argument("sample_levy_pair: require beta > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("sample_levy_pair: require tol > 0");
    const double b = beta.value, a = alpha.value;
    const double rms_coef = std::sqrt(b / (2.0 - b));
    double arrival = 0.0, u = 0.0, v = 0.0;
    int k = 0;
    for (;;) {
        arrival += stream.exponential();
        const double term_u = std::pow(arrival, -1.0 / b);
        const double term_v = std::pow(term_u, a);
        u += term_u;
        v += term_v;
        ++k;
        // RMS of the un-sampled tail mass of U; term_u*sqrt(arrival)
        // equals arrival^((b-2)/(2b)).
        const double rms = rms_coef * term_u * std::sqrt(arrival);
        if (k >= 2 && rms < tol * u) {
            // Conditional means of the truncated remainders.
            u += b / (1.0 - b) * term_u * arrival;
            v += b / (a - b) * term_v * arrival;
            return LevyPair{u, v, k, rms / u};
        }
    }
}

}  // namespace ratiostat
