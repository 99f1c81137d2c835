#include "ratiostat/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratiostat {

namespace {

void check_positive_finite(std::span<const double> y) {
    if (y.empty()) throw std::invalid_argument("statistics: empty sample");
    for (double v : y)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("statistics: y entries must be positive and finite");
}

void check_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("statistics: nonfinite entry");
}

double max_of(std::span<const double> v) {
    return *std::max_element(v.begin(), v.end());
}

}  // namespace

double compensated_sum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double stat_t_n(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("stat_t_n: length mismatch");
    check_positive_finite(y);
    check_finite(x);
    const double m = max_of(y);
    double num = 0.0, num_c = 0.0, den = 0.0, den_c = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double w = y[i] / m;
        double t = den + w;
        den_c += std::abs(den) >= w ? (den - t) + w : (w - t) + den;
        den = t;
        const double xw = x[i] * w;
        t = num + xw;
        num_c += std::abs(num) >= std::abs(xw) ? (num - t) + xw : (xw - t) + num;
        num = t;
    }
    return (num + num_c) / (den + den_c);
}

double stat_s_n(std::span<const double> y, double alpha) {
    check_positive_finite(y);
    const double m = max_of(y);
    double den = 0.0, den_c = 0.0;
    for (double v : y) {
        const double w = v / m;
        const double t = den + w;
        den_c += den >= w ? (den - t) + w : (w - t) + den;
        den = t;
    }
    const double total = den + den_c;  // sum of y_i / max, in [1, n]
    double num = 0.0, num_c = 0.0;
    for (double v : y) {
        const double r = std::pow(v / m / total, alpha);
        const double t = num + r;
        num_c += num >= r ? (num - t) + r : (r - t) + num;
        num = t;
    }
    return num + num_c;
}

double stat_d_max(std::span<const double> y) {
    check_positive_finite(y);
    const double m = max_of(y);
    double den = 0.0, den_c = 0.0;
    for (double v : y) {
        const double w = v / m;
        const double t = den + w;
        den_c += den >= w ? (den - t) + w : (w - t) + den;
        den = t;
    }
    return 1.0 / (den + den_c);
}

double stat_t_n_log(std::span<const double> x, std::span<const double> log_y) {
    if (x.size() != log_y.size())
        throw std::invalid_argument("stat_t_n_log: length mismatch");
    if (log_y.empty()) throw std::invalid_argument("stat_t_n_log: empty sample");
    check_finite(x);
    check_finite(log_y);
    const double m = max_of(log_y);
    double num = 0.0, num_c = 0.0, den = 0.0, den_c = 0.0;
    for (std::size_t i = 0; i < log_y.size(); ++i) {
        const double w = std::exp(log_y[i] - m);
        double t = den + w;
        den_c += den >= w ? (den - t) + w : (w - t) + den;
        den = t;
        const double xw = x[i] * w;
        t = num + xw;
        num_c += std::abs(num) >= std::abs(xw) ? (num - t) + xw : (xw - t) + num;
        num = t;
    }
    return (num + num_c) / (den + den_c);
}

double stat_s_n_log(std::span<const double> log_y, double alpha) {
    if (log_y.empty()) throw std::invalid_argument("stat_s_n_log: empty sample");
    check_finite(log_y);
    const double m = max_of(log_y);
    double den = 0.0, den_c = 0.0;
    for (double v : log_y) {
        const double w = std::exp(v - m);
        const double t = den + w;
        den_c += den >= w ? (den - t) + w : (w - t) + den;
        den = t;
    }
    const double total = den + den_c;
    const double log_total = std::log(total);
    double num = 0.0, num_c = 0.0;
    for (double v : log_y) {
        const double r = std::exp(alpha * (v - m - log_total));
        const double t = num + r;
        num_c += num >= r ? (num - t) + r : (r - t) + num;
        num = t;
    }
    return num + num_c;
}

double stat_d_max_log(std::span<const double> log_y) {
    if (log_y.empty()) throw std::invalid_argument("stat_d_max_log: empty sample");
    check_finite(log_y);
    const double m = max_of(log_y);
    double den = 0.0, den_c = 0.0;
    for (double v : log_y) {
        const double w = std::exp(v - m);
        const double t = den + w;
        den_c += den >= w ? (den - t) + w : (w - t) + den;
        den = t;
    }
    return 1.0 / (den + den_c);
}

}  // namespace ratiostat
