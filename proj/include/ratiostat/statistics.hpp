#pragma once

#include <cstddef>
#include <span>

namespace ratiostat {

// Neumaier's variant of Kahan compensated summation; permuting the inputs
// moves the result by at most a few ulps.
double compensated_sum(std::span<const double> values);

// T_n = sum(x_i y_i) / sum(y_i).  Requires equal lengths, n >= 1,
// strictly positive finite y.
double stat_t_n(std::span<const double> x, std::span<const double> y);

// S_n(alpha) = sum(y_i^alpha) / (sum y_i)^alpha, computed from the
// max-rescaled ratios so that no intermediate can overflow; value lies in
// [n^(1-alpha), 1].
double stat_s_n(std::span<const double> y, double alpha);

// D_n = max(y_i) / sum(y_i).
double stat_d_max(std::span<const double> y);

// Log-domain variants taking log(y_i) in place of y_i, for families whose
// draws exceed DBL_MAX (SlowVary).  Identical mathematical value, obtained
// by subtracting max(log y) before exponentiating.
double stat_t_n_log(std::span<const double> x, std::span<const double> log_y);
double stat_s_n_log(std::span<const double> log_y, double alpha);
double stat_d_max_log(std::span<const double> log_y);

}  // namespace ratiostat
