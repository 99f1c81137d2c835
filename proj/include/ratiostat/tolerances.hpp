#pragma once

#include <cstdint>

// Committed tolerances for every statistical or asymptotic check, shared by
// the verify command and the acceptance suite so there is a single source
// of truth.  Statistical slack is 3 standard errors plus a stated bias
// allowance where truncation or finite-n bias enters; asymptotic-limit
// tolerances were calibrated with pilot runs at the quoted scales.

namespace ratiostat::tol {

// --- closed-form layer -------------------------------------------------
inline constexpr double kClosedFormAbs = 1e-12;   // gamma_map / ktilde identities
inline constexpr double kRoundTripAbs = 1e-10;    // invert o map
inline constexpr double kLogGammaAbs = 1e-13;     // on [0.1, 100]

// --- LePage oracle vs closed form --------------------------------------
inline constexpr int kLevyReplicates = 200000;
inline constexpr double kLevyTruncTol = 1e-3;     // relative RMS of remainder
inline constexpr double kLevyBiasSlack = 0.005;   // compensation bias allowance

// --- E S_n(alpha) convergence ------------------------------------------
inline constexpr double kMeanSnPareto = 0.02;     // n = 1e5, R = 2000
inline constexpr double kMeanSnSlowVary = 0.05;   // n = 1e3, R = 500
inline constexpr double kMeanSnExpCeiling = 1e-3; // n = 1e4: theory ~ 2e-4
inline constexpr double kDMaxMedianFloor = 0.9;   // D(0) single-term dominance

// --- estimator ----------------------------------------------------------
inline constexpr double kBetaHatAbs = 0.05;       // N = 1e6, block = 1e3
inline constexpr double kHillCrossAbs = 0.07;     // ratio-inverse vs Hill

// --- quadrature limits --------------------------------------------------
inline constexpr double kMellinRelPareto = 0.02;    // x = 1e6
inline constexpr double kMellinRelSlowVary = 0.05;  // x = 1e10, ~1/log x decay
inline constexpr double kKaramataRel = 0.005;       // x = 1e6
inline constexpr double kTwoRouteRel = 1e-6;        // g_inf vs x^-alpha f(1/x)
inline constexpr double kKaramataExpCeiling = 1e-6; // negative control at x = 50

// --- cf condition and tail constant -------------------------------------
inline constexpr double kCfRademacherAbs = 1e-4;  // t = 0.01
inline constexpr double kCfSymStableAbs = 1e-12;  // closed form
inline constexpr double kTailBandRel = 0.15;      // x in {10, 20}, 1e7 draws

// --- T_n nondegeneracy and convergence ----------------------------------
inline constexpr double kTnStdFloorHeavy = 0.1;   // (Normal, Pareto(0.5)), n = 1e4
inline constexpr double kTnStdCeilLight = 0.05;   // (Normal, Exponential), n = 1e4
inline constexpr double kKsCritical = 1.63;       // 1% two-sample KS scale factor
inline constexpr int kKsReplicates = 2000;

}  // namespace ratiostat::tol
