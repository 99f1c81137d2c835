#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratiostat/rng.hpp"
#include "ratiostat/samplers.hpp"

using namespace ratiostat;

namespace {

// Mean and standard error of f over the sample.
template <typename F>
std::pair<double, double> transform_mean(const std::vector<double>& data, F f) {
  double sum = 0.0;
  double sumsq = 0.0;
  for (double v : data) {
    const double t = f(v);
    sum += t;
    sumsq += t * t;
  }
  const double mean = sum / data.size();
  const double var = std::max(0.0, sumsq / data.size() - mean * mean);
  return {mean, std::sqrt(var / data.size())};
}

}  // namespace

TEST_CASE("spec validation rejects out-of-range parameters") {
  CHECK_THROWS_AS(validate_spec(DistSpecY{ParetoY{1.5, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecY{ParetoY{0.0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecY{ParetoY{0.5, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecY{PositiveStableY{1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecY{ExponentialY{0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecX{SymStableX{1.0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecX{SymStableX{2.1, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_spec(DistSpecX{NormalX{0.0}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_spec(DistSpecY{ParetoY{0.5, 1.0}}));
  CHECK_NOTHROW(validate_spec(DistSpecX{NormalX{1.0}}));
}

TEST_CASE("samplers refuse invalid specs and empty requests") {
  RngStream s = substream(1, 0);
  CHECK_THROWS_AS(sample_y(DistSpecY{ParetoY{1.5, 1.0}}, 10, s),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_y(DistSpecY{ParetoY{0.5, 1.0}}, 0, s),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_x(DistSpecX{NormalX{1.0}}, 0, s),
                  std::invalid_argument);
}

TEST_CASE("pareto tail fractions match the survival function") {
  RngStream s = substream(101, 0);
  const int n = 1000000;
  const std::vector<double> y = sample_y(DistSpecY{ParetoY{0.5, 1.0}}, n, s);
  int over4 = 0;
  int over9 = 0;
  for (double v : y) {
    CHECK(v >= 1.0);
    if (v > 4.0) ++over4;
    if (v > 9.0) ++over9;
  }
  // Survival 4^{-1/2} = 1/2 and 9^{-1/2} = 1/3.
  const double se4 = std::sqrt(0.5 * 0.5 / n);
  const double se9 = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / n);
  CHECK(std::fabs(double(over4) / n - 0.5) <= 4.0 * se4);
  CHECK(std::fabs(double(over9) / n - 1.0 / 3.0) <= 4.0 * se9);
}

TEST_CASE("pareto scale parameter shifts draws multiplicatively") {
  RngStream a = substream(5, 0);
  RngStream b = substream(5, 0);
  const std::vector<double> y1 = sample_y(DistSpecY{ParetoY{0.4, 1.0}}, 1000, a);
  const std::vector<double> y2 = sample_y(DistSpecY{ParetoY{0.4, 7.5}}, 1000, b);
  for (size_t i = 0; i < y1.size(); ++i) {
    CHECK(y2[i] == doctest::Approx(7.5 * y1[i]).epsilon(1e-12));
  }
}

TEST_CASE("slow variation draws sit above e with median e squared") {
  RngStream s = substream(23, 0);
  const int n = 200000;
  const std::vector<double> ly = sample_y_log(DistSpecY{SlowVaryY{}}, n, s);
  int over = 0;
  for (double v : ly) {
    CHECK(v >= 1.0);
    if (v > 2.0) ++over;
  }
  // P(log Y > 2) = P(U < 1/2) = 1/2.
  CHECK(std::fabs(double(over) / n - 0.5) <= 4.0 * std::sqrt(0.25 / n));
}

TEST_CASE("log-domain and linear sampling agree on the same stream") {
  for (const DistSpecY& spec :
       {DistSpecY{ParetoY{0.5, 2.0}}, DistSpecY{ExponentialY{1.5}},
        DistSpecY{PositiveStableY{0.5}}}) {
    RngStream a = substream(31, 4);
    RngStream b = substream(31, 4);
    const std::vector<double> y = sample_y(spec, 200, a);
    const std::vector<double> ly = sample_y_log(spec, 200, b);
    for (size_t i = 0; i < y.size(); ++i) {
      CHECK(y[i] == doctest::Approx(std::exp(ly[i])).epsilon(1e-14));
    }
  }
}

TEST_CASE("positive stable Laplace transform") {
  for (double beta : {0.5, 0.75}) {
    RngStream s = substream(307, static_cast<std::uint64_t>(beta * 100));
    const std::vector<double> y =
        sample_y(DistSpecY{PositiveStableY{beta}}, 1000000, s);
    for (double t : {0.5, 1.0, 2.0}) {
      auto [mean, se] =
          transform_mean(y, [&](double v) { return std::exp(-t * v); });
      const double target = std::exp(-std::pow(t, beta));
      CHECK(std::fabs(mean - target) <= 3.0 * se + 1e-6);
    }
  }
}

TEST_CASE("exponential family obeys its rate") {
  RngStream s = substream(47, 0);
  const std::vector<double> y =
      sample_y(DistSpecY{ExponentialY{2.0}}, 500000, s);
  auto [mean, se] = transform_mean(y, [](double v) { return v; });
  CHECK(std::fabs(mean - 0.5) <= 4.0 * se);
}

TEST_CASE("rademacher takes only the two signs evenly") {
  RngStream s = substream(53, 0);
  const int n = 1000000;
  const std::vector<double> x = sample_x(DistSpecX{RademacherX{}}, n, s);
  double sum = 0.0;
  for (double v : x) {
    CHECK((v == 1.0 || v == -1.0));
    sum += v;
  }
  CHECK(std::fabs(sum / n) <= 4.0 / std::sqrt(double(n)));
}

TEST_CASE("normal factor respects sigma") {
  RngStream s = substream(59, 0);
  const int n = 500000;
  const std::vector<double> x = sample_x(DistSpecX{NormalX{2.0}}, n, s);
  double sum = 0.0;
  double sumsq = 0.0;
  for (double v : x) {
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) <= 4.0 * 2.0 / std::sqrt(double(n)));
  CHECK(std::fabs(var - 4.0) <= 4.0 * 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("symmetric stable characteristic function") {
  RngStream s = substream(61, 0);
  const std::vector<double> x =
      sample_x(DistSpecX{SymStableX{1.5, 1.0}}, 1000000, s);
  for (double t : {0.25, 0.5, 1.0}) {
    auto [mean, se] =
        transform_mean(x, [&](double v) { return std::cos(t * v); });
    const double target = std::exp(-std::pow(t, 1.5));
    CHECK(std::fabs(mean - target) <= 3.0 * se + 1e-6);
  }
}

TEST_CASE("every X family passes a self-normalized mean-zero test") {
  for (const DistSpecX& spec :
       {DistSpecX{NormalX{1.0}}, DistSpecX{RademacherX{}},
        DistSpecX{SymStableX{1.5, 1.0}}}) {
    RngStream s = substream(67, 0);
    const int n = 1000000;
    const std::vector<double> x = sample_x(spec, n, s);
    double sum = 0.0;
    double sumsq = 0.0;
    for (double v : x) {
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sumsq / n - mean * mean);
    CHECK(std::fabs(mean) <= 4.0 * sd / std::sqrt(double(n)));
  }
}

TEST_CASE("levy pair invariants hold on every draw") {
  for (double beta : {0.25, 0.5, 0.75}) {
    for (double alpha : {1.5, 2.0}) {
      RngStream s = substream(
          71, static_cast<std::uint64_t>(beta * 100 + alpha * 10));
      for (int i = 0; i < 10000; ++i) {
        const LevyPair p =
            sample_levy_pair(BetaIdx(beta), Alpha(alpha), 1e-3, s);
        CHECK(p.u > 0.0);
        CHECK(p.v > 0.0);
        CHECK(p.v <= std::pow(p.u, alpha) * (1.0 + 1e-12));
        CHECK(p.terms_used >= 2);
        CHECK(p.tail_bound < 1e-3);
      }
    }
  }
}

TEST_CASE("levy pair replays deterministically") {
  RngStream a = substream(73, 9);
  RngStream b = substream(73, 9);
  for (int i = 0; i < 100; ++i) {
    const LevyPair p = sample_levy_pair(BetaIdx(0.5), Alpha(2.0), 1e-3, a);
    const LevyPair q = sample_levy_pair(BetaIdx(0.5), Alpha(2.0), 1e-3, b);
    CHECK(p.u == q.u);
    CHECK(p.v == q.v);
    CHECK(p.terms_used == q.terms_used);
  }
}

TEST_CASE("levy U component is one-sided stable after rescaling") {
  // The series realizes intensity beta * u^(-beta-1), whose Laplace
  // exponent is Gamma(1-beta) t^beta.  Dividing draws by
  // Gamma(1-beta)^(1/beta) recovers the exp(-t^beta) contract; at
  // beta = 1/2 the divisor is pi.
  RngStream s = substream(79, 0);
  const double divisor = 3.141592653589793;
  const int n = 100000;
  double sum = 0.0;
  double sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const LevyPair p = sample_levy_pair(BetaIdx(0.5), Alpha(2.0), 1e-3, s);
    const double v = std::exp(-p.u / divisor);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sumsq / n - mean * mean) / n);
  CHECK(std::fabs(mean - std::exp(-1.0)) <= 3.0 * se + 2e-3);
}

TEST_CASE("levy ratio is scale free") {
  RngStream s = substream(83, 0);
  const double alpha = 1.7;
  for (int i = 0; i < 1000; ++i) {
    const LevyPair p = sample_levy_pair(BetaIdx(0.4), Alpha(alpha), 1e-3, s);
    const double ratio = p.v / std::pow(p.u, alpha);
    const double c = 3.7;
    const double scaled = (std::pow(c, alpha) * p.v) / std::pow(c * p.u, alpha);
    CHECK(scaled == doctest::Approx(ratio).epsilon(1e-12));
  }
}

TEST_CASE("tighter truncation tolerance uses more terms") {
  RngStream a = substream(89, 0);
  RngStream b = substream(89, 0);
  const LevyPair loose = sample_levy_pair(BetaIdx(0.75), Alpha(2.0), 1e-2, a);
  const LevyPair tight = sample_levy_pair(BetaIdx(0.75), Alpha(2.0), 1e-4, b);
  CHECK(tight.terms_used > loose.terms_used);
  CHECK(tight.tail_bound < loose.tail_bound);
}
