#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ratiostat/rng.hpp"
#include "ratiostat/special_functions.hpp"

namespace ratiostat {

// Positive heavy-tailed families for the weights Y.
struct ParetoY {
    double beta;        // tail index, 0 < beta < 1
    double xmin = 1.0;  // scale / support lower end
};
struct SlowVaryY {};  // Y = exp(1/U): survival 1/log(y) for y >= e
struct PositiveStableY {
    double beta;  // one-sided stable index, 0 < beta < 1
};
struct ExponentialY {
    double rate = 1.0;  // finite-mean control family
};
using DistSpecY = std::variant<ParetoY, SlowVaryY, PositiveStableY, ExponentialY>;

// Mean-zero families for X.
struct NormalX {
    double sigma = 1.0;
};
struct RademacherX {};
struct SymStableX {
    double alpha;  // in (1,2), strictly
    double scale = 1.0;
};
using DistSpecX = std::variant<NormalX, RademacherX, SymStableX>;

// Throw std::invalid_argument when parameters violate the family domain.
void validate_spec(const DistSpecY& spec);
void validate_spec(const DistSpecX& spec);

// n i.i.d. draws, all strictly positive.
std::vector<double> sample_y(const DistSpecY& spec, std::size_t n, RngStream& stream);

// Same draws as sample_y (identical stream consumption) but returned as
// log Y.  SlowVary can exceed DBL_MAX with probability ~1.4e-3 per draw,
// so every consumer that aggregates large samples should work in logs.
std::vector<double> sample_y_log(const DistSpecY& spec, std::size_t n, RngStream& stream);

// n i.i.d. mean-zero draws.
std::vector<double> sample_x(const DistSpecX& spec, std::size_t n, RngStream& stream);

// One draw of the bivariate stable limit (U, V) from the LePage series
// over Poisson arrival times g_k:  U = sum g_k^(-1/beta), V = sum
// g_k^(-alpha/beta).  The series is truncated once the RMS of the
// remaining U-mass falls below tol*U, and the exact conditional means of
// both remainders (Campbell's formula over the un-sampled arrival range)
// are added back, which keeps E U, E V and v <= u^alpha intact while the
// term count stays modest (roughly 6 / 45 / 550 terms on average at
// beta = 0.25 / 0.5 / 0.75 for tol = 1e-3).  tail_bound records the
// relative RMS bound actually achieved, always < tol.
struct LevyPair {
    double u;
    double v;
    int terms_used;
    double tail_bound;
};

LevyPair sample_levy_pair(BetaIdx beta, Alpha alpha, double tol, RngStream& stream);

}  // namespace ratiostat
