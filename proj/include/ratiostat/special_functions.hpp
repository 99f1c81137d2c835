#pragma once

#include <stdexcept>

namespace ratiostat {

// Exponent of the ratio statistic S_n(alpha), restricted to (1, 2].
struct Alpha {
    double value;
    explicit Alpha(double v) : value(v) {
        if (!(v > 1.0) || !(v <= 2.0))
            throw std::domain_error("Alpha: require 1 < alpha <= 2");
    }
};

// Stable tail index, restricted to [0, 1).
struct BetaIdx {
    double value;
    explicit BetaIdx(double v) : value(v) {
        if (!(v >= 0.0) || !(v < 1.0))
            throw std::domain_error("BetaIdx: require 0 <= beta < 1");
    }
};

// Limit of E S_n(alpha); lives in (0, 1].
struct GammaVal {
    double value;
    explicit GammaVal(double v) : value(v) {
        if (!(v > 0.0 && v <= 1.0))
            throw std::domain_error("GammaVal: require 0 < gamma <= 1");
    }
};

// ln Gamma(x) for x > 0.  Absolute error below 1e-13 on [0.1, 100].
double log_gamma(double x);

// gamma(alpha, beta) = Gamma(alpha-beta) / (Gamma(alpha) * Gamma(1-beta)).
// Strictly decreasing in beta; equals 1 exactly at beta = 0.
GammaVal gamma_map(Alpha alpha, BetaIdx beta);

// Unique beta in [0,1) with gamma_map(alpha, beta) = gamma.
// Bracketed bisection; absolute tolerance 1e-12.
BetaIdx invert_gamma_map(Alpha alpha, GammaVal gamma);

// ktilde(z) = integral_0^1 (1-v)^(alpha-2) v^z dv = B(alpha-1, 1+z),
// convergent for z > -1; strictly decreasing in z.
double mellin_ktilde(Alpha alpha, double z);

// Multiplicative constant in P{|X| > x} ~ c Gamma(alpha) (2/pi) sin(pi alpha/2) x^(-alpha),
// stated for 1 < alpha < 2 only.
double tail_constant(double alpha, double c);

}  // namespace ratiostat
