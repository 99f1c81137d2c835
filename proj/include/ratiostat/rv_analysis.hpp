#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ratiostat/samplers.hpp"
#include "ratiostat/special_functions.hpp"

namespace ratiostat {

// Survival function Gbar with a known lower support bound: Gbar(u) = 1 for
// u <= support_low, nonincreasing, -> 0 at infinity.
struct TailFunction {
    std::function<double(double)> evaluate;
    double support_low = 0.0;
    std::string label;
};

TailFunction pareto_tail(double beta, double xmin = 1.0);
TailFunction slowvary_tail();                      // 1/log(u) for u >= e
TailFunction exponential_tail(double rate = 1.0);  // negative control
TailFunction unit_tail();  // Gbar == 1 everywhere; degenerate test function

struct RatioCurve {
    std::vector<double> abscissae;
    std::vector<double> values;
    double target;
};

// f(t) = integral_0^inf Gbar(u) u^(alpha-1) e^(-ut) du, t > 0.  Adaptive
// double-exponential quadrature split at support_low and 1/t; relative
// error below ~1e-8 or std::runtime_error.
double laplace_f(const TailFunction& gbar, Alpha alpha, double t,
                 double rel_tol = 1e-10);

// g_inf(x) = integral_0^inf Gbar(ux) u^(alpha-1) e^(-u) du = x^(-alpha) f(1/x).
double g_infinity(const TailFunction& gbar, Alpha alpha, double x,
                  double rel_tol = 1e-10);

// integral_1^inf (u-1)^(alpha-2) u^(-alpha) g_inf(x/u) du / g_inf(x).
// The endpoint singularity at u = 1 is removed by u = 1 + s^(1/(alpha-1))
// on (1,2] and the tail is folded to (0,1/2] by w = 1/u, where the kernel
// collapses to (1-w)^(alpha-2).
double mellin_conv_ratio(const TailFunction& gbar, Alpha alpha, double x,
                         double rel_tol = 1e-9);

// x^alpha Gbar(x) / U(x) with U(x) = integral_0^x Gbar(u) u^(alpha-1) du;
// tends to alpha - beta when Gbar is regularly varying with index -beta.
double karamata_ratio(const TailFunction& gbar, Alpha alpha, double x,
                      double rel_tol = 1e-10);

// -log(Re phi_X(t)) / t^alpha on the grid, with the family's closed-form
// characteristic function; target is the family's c (Normal: sigma^2/2,
// Rademacher: 1/2, SymStable: scale^alpha).
RatioCurve cf_condition_ratio(const DistSpecX& xspec, double alpha,
                              std::span<const double> t_grid);

// Same ratio with Re phi replaced by the empirical cosine mean of the
// sample; throws when the empirical cf is nonpositive somewhere on the grid.
RatioCurve cf_condition_ratio(std::span<const double> sample, double alpha,
                              std::span<const double> t_grid);

// Empirical P{|X| > x} * x^alpha / tail_constant(alpha, c) on the grid;
// requires at least 50 exceedances per grid point.
RatioCurve tail_vs_constant(std::span<const double> sample, double alpha,
                            double c, std::span<const double> x_grid);

}  // namespace ratiostat
