// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Special functions behind the acceleration factor
//
//   a(r) = (1/cosh^3 r) sum_{n>=0} sqrt(n+1) tanh^{2n} r
//        = Li_{-1/2}(tanh^2 r) / (cosh r sinh^2 r),
//
// where Li_{-1/2}(x) = sum_{n>=1} sqrt(n) x^n.  a(r) carries the whole
// acceleration dependence of the closed forms in qslt.hpp: it decreases from
// a(0) = 1 to the asymptote sqrt(pi)/2 ~ 0.8862 as r -> infinity.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

// Riemann zeta at negative half-integers, from the functional equation
// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)  (DLMF 25.4.2),
// evaluated to 30 digits with mpmath.
inline constexpr double kZetaNegHalf = -0.207886224977354566017306725397;
inline constexpr double kZetaNeg3Half = -0.0254852018898330359495429869107;
inline constexpr double kZetaNeg5Half = 0.00851692877785033054235856702834;
inline constexpr double kZetaNeg7Half = 0.00444101133547943195853465801782;
// First omitted coefficient; used only to estimate the truncation error.
inline constexpr double kZetaNeg9Half = -0.00309166924721583384482425674513;

// Gamma(3/2) = sqrt(pi)/2, also the r -> infinity limit of a(r).
inline constexpr double kSqrtPiOverTwo = 0.886226925452758013649083741671;

// Direct summation handles x <= kPolylogSwitch; the log-argument expansion
// takes over above it, where the series needs O(1/(1-x)) terms.
inline constexpr double kPolylogSwitch = 0.99;
inline constexpr std::int64_t kPolylogTermCap = 10'000'000;

// accel_factor switches from the closed polylog form to the defining series
// below this rapidity; the closed form divides by sinh^2 r -> 0 there.
inline constexpr double kAccelSeriesSwitch = 1e-4;

// Li_{-1/2}(x) by direct summation.  The tail after n terms is bounded with
// the tangent overestimate sqrt(k) <= sqrt(n) + (k-n)/(2 sqrt(n)):
//
//   sum_{k>n} sqrt(k) x^k <= x^{n+1} [ sqrt(n)/(1-x) + 1/(2 sqrt(n)(1-x)^2) ].
//
// Returns nullopt if the bound has not dropped below rel_tol * sum within
// term_cap terms.
inline std::optional<double> polylog_neg_half_direct(
    double x, double rel_tol = 1e-13, std::int64_t term_cap = kPolylogTermCap) {
  if (x == 0.0) return 0.0;
  const double geo = 1.0 / (1.0 - x);
  double sum = 0.0;
  double xn = 1.0;
  for (std::int64_t n = 1; n <= term_cap; ++n) {
    xn *= x;
    const double rn = std::sqrt(static_cast<double>(n));
    sum += rn * xn;
    const double tail = xn * x * (rn * geo + 0.5 / rn * geo * geo);
    if (tail <= rel_tol * sum) return sum;
  }
  return std::nullopt;
}

// Li_{-1/2}(x) for x near 1, via Li_s(e^mu) = Gamma(1-s)(-mu)^{s-1}
//                                             + sum_k zeta(s-k) mu^k / k!
// with s = -1/2, mu = ln x, truncated at k = 3.
inline double polylog_neg_half_asymptotic(double x) {
  const double mu = std::log(x);  // negative, small in magnitude near x = 1
  const double lead = kSqrtPiOverTwo * std::pow(-mu, -1.5);
  const double tail =
      kZetaNegHalf +
      mu * (kZetaNeg3Half + mu * (0.5 * kZetaNeg5Half + mu * kZetaNeg7Half / 6.0));
  const double value = lead + tail;
  const double truncation = std::abs(kZetaNeg9Half) * std::pow(mu, 4) / 24.0;
  if (!(truncation <= 1e-12 * value)) {
    throw AccuracyError("polylog_neg_half: expansion truncation error " +
                        std::to_string(truncation) + " too large at x = " +
                        std::to_string(x));
  }
  return value;
}

// Li_{-1/2}(x) on [0, 1) to 1e-12 relative accuracy.
inline double polylog_neg_half(double x) {
  if (!std::isfinite(x) || x < 0.0 || x >= 1.0) {
    throw DomainError("polylog_neg_half requires 0 <= x < 1, got " +
                      std::to_string(x));
  }
  if (x <= kPolylogSwitch) {
    if (auto v = polylog_neg_half_direct(x)) return *v;
    // Summation stalled; the expansion is accurate exactly in that regime.
  }
  return polylog_neg_half_asymptotic(x);
}

// r = artanh(exp(-pi Omega)) for Rindler frequency Omega > 0.
inline Rapidity rapidity_from_frequency(double omega) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError(
        "rapidity_from_frequency requires Omega > 0 (r diverges otherwise), got " +
        std::to_string(omega));
  }
  return Rapidity(std::atanh(std::exp(-M_PI * omega)));
}

// The acceleration-dependent factor a(r), in (0, 1]; empirically bounded
// below by 0.88 (the asymptote is sqrt(pi)/2).
class AccelFactor {
 public:
  explicit AccelFactor(double v) : v_(v) {
    // 1 + 1e-12 admits last-ulp rounding of the exact maximum a(0) = 1.
    if (!std::isfinite(v) || v <= 0.0 || v > 1.0 + 1e-12) {
      throw ConstructionError("AccelFactor outside (0, 1]: " + std::to_string(v));
    }
  }

  double value() const { return v_; }

 private:
  double v_;
};

// Defining series (1/cosh^3 r) sum sqrt(n+1) t^n, t = tanh^2 r.  Finite at
// r = 0 where it evaluates to exactly 1.  Tail bound as in the polylog.
inline double accel_factor_series(Rapidity r, double rel_tol = 1e-13,
                                  std::int64_t term_cap = kPolylogTermCap) {
  const double th = std::tanh(r.value());
  const double t = th * th;
  const double ch = std::cosh(r.value());
  const double scale = 1.0 / (ch * ch * ch);
  if (t == 0.0) return scale;  // only n = 0 survives
  const double geo = 1.0 / (1.0 - t);
  double sum = 0.0;
  double tn = 1.0;
  for (std::int64_t n = 0; n <= term_cap; ++n) {
    const double rn = std::sqrt(static_cast<double>(n + 1));
    sum += rn * tn;
    const double tail = tn * t * (rn * geo + 0.5 / rn * geo * geo);
    if (tail <= rel_tol * sum) return scale * sum;
    tn *= t;
  }
  throw AccuracyError("accel_factor_series did not converge at r = " +
                      std::to_string(r.value()));
}

// Closed form Li_{-1/2}(tanh^2 r) / (cosh r sinh^2 r); requires r > 0.
inline double accel_factor_closed(Rapidity r) {
  if (r.value() == 0.0) {
    throw DomainError("accel_factor_closed is 0/0 at r = 0; use the series");
  }
  const double th = std::tanh(r.value());
  const double sh = std::sinh(r.value());
  const double ch = std::cosh(r.value());
  return polylog_neg_half(th * th) / (ch * sh * sh);
}

inline AccelFactor accel_factor(Rapidity r) {
  const double v = r.value() <= kAccelSeriesSwitch ? accel_factor_series(r)
                                                   : accel_factor_closed(r);
  return AccelFactor(v);
}

}  // namespace unruh_qsl
