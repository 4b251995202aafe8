// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Closed forms for the quantum-speed-limit time of the amplitude-damped,
// Unruh-decohered Bell pair, with actual driving time normalised to tau = 1:
//
//   D(p, r)     = (1 - sqrt(p))/sqrt(2) * sqrt((1 + sqrt(p))^2 + a^2)
//   F(p, a)     = sqrt(4 + a^2) - sqrt(p (4p + a^2))
//                 - (a^2/2) (asinh(2 sqrt(p)/a) - asinh(2/a))
//   speed(p, r) = F(p, a) / (2 sqrt(2))
//   tau_qsl     = 2 (1 - sqrt(p)) sqrt((1 + sqrt(p))^2 + a^2) / F(p, a)
//
// F is the p-integral of sqrt((4p' + a^2)/p') from p to 1; a = a(r) from
// specfun.hpp.  The phase-damping counterpart is the r-independent
// tau(q) = (1 - sqrt(1-q)) / (1 - sqrt(q)).
//
// These expressions live on a mode-summed 2x2 reduction of the joint
// operators ("effective qubit"): e00/e11 collect the diagonal of the two
// Alice blocks, e10/e01 the first superdiagonal of the coherence blocks.
// The Hilbert-Schmidt norm of that reduction (its Frobenius norm, i.e. the
// root of the summed squared singular values) reproduces D and F exactly;
// the Frobenius norm of the full joint-space difference does not, because
// the closed forms carry the squared *sum* of the coherence band, not the
// sum of squares.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/specfun.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

// Below this the a-dependent terms of F are replaced by their a -> 0 limit
// F = 2(1 - p); asinh(2/a) grows only logarithmically but 0 * inf is a NaN.
inline constexpr double kSpeedSmallA = 1e-8;

struct EffectiveQubit {
  std::complex<double> e00{0.0, 0.0};
  std::complex<double> e01{0.0, 0.0};
  std::complex<double> e10{0.0, 0.0};
  std::complex<double> e11{0.0, 0.0};
};

// Mode-summed 2x2 reduction of a joint qubit (x) Fock operator:
//   e00 = sum_n <0,n|X|0,n>        e11 = sum_n <1,n|X|1,n>
//   e10 = sum_n <1,n+1|X|0,n>      e01 = sum_n <0,n|X|1,n+1>
// Accepts any Eigen expression; only O(dim) coefficients are read, so lazy
// differences like rho.matrix() - damped.matrix() never materialise.
template <typename Derived>
EffectiveQubit contract_effective(const Eigen::MatrixBase<Derived>& joint_op) {
  const Eigen::Index d = joint_op.rows();
  if (d != joint_op.cols() || d < 2 || d % 2 != 0) {
    throw DimensionError("contract_effective needs a square even-dimensional "
                         "operator, got " + std::to_string(d) + " rows");
  }
  const Eigen::Index m = d / 2;
  EffectiveQubit e;
  for (Eigen::Index n = 0; n < m; ++n) {
    e.e00 += joint_op.derived()(n, n);
    e.e11 += joint_op.derived()(m + n, m + n);
  }
  for (Eigen::Index n = 0; n + 1 < m; ++n) {
    e.e10 += joint_op.derived()(m + n + 1, n);
    e.e01 += joint_op.derived()(n, m + n + 1);
  }
  return e;
}

// Root of the summed squared singular values of the 2x2 reduction; for any
// matrix this equals the Frobenius norm.
inline double hs_norm(const EffectiveQubit& e) {
  return std::sqrt(std::norm(e.e00) + std::norm(e.e01) + std::norm(e.e10) +
                   std::norm(e.e11));
}

namespace internal {

inline void check_damping(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw DomainError("damping parameter must lie in [0, 1], got " +
                      std::to_string(p));
  }
}

inline void check_accel(double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw DomainError("acceleration factor must be finite and >= 0, got " +
                      std::to_string(a));
  }
}

}  // namespace internal

// D(p, a): Hilbert-Schmidt distance between the undamped and damped states.
inline double distance_closed_at(double p_tau, double a) {
  internal::check_damping(p_tau);
  internal::check_accel(a);
  const double sp = std::sqrt(p_tau);
  return (1.0 - sp) / std::sqrt(2.0) * std::sqrt((1.0 + sp) * (1.0 + sp) + a * a);
}

// F(p, a), the speed integral; identically 0 at p = 1 and 2(1 - p) as a -> 0.
inline double speed_integral(double p_tau, double a) {
  internal::check_damping(p_tau);
  internal::check_accel(a);
  if (a < kSpeedSmallA) return 2.0 * (1.0 - p_tau);
  const double sp = std::sqrt(p_tau);
  return std::sqrt(4.0 + a * a) - std::sqrt(p_tau * (4.0 * p_tau + a * a)) -
         0.5 * a * a * (std::asinh(2.0 * sp / a) - std::asinh(2.0 / a));
}

inline double avg_speed_closed_at(double p_tau, double a) {
  return speed_integral(p_tau, a) / (2.0 * std::sqrt(2.0));
}

// tau_qsl as a fraction of the actual evolution time.  The p -> 1 limit of
// the ratio is 1 (both numerator and denominator vanish linearly in
// 1 - sqrt(p)); p = 1 returns that limit.
inline double qslt_closed_at(double p_tau, double a) {
  internal::check_damping(p_tau);
  internal::check_accel(a);
  if (p_tau == 1.0) return 1.0;
  const double sp = std::sqrt(p_tau);
  return 2.0 * (1.0 - sp) * std::sqrt((1.0 + sp) * (1.0 + sp) + a * a) /
         speed_integral(p_tau, a);
}

struct QsltResult {
  double p_tau = 0.0;
  double r = 0.0;
  double distance = 0.0;
  double avg_speed = 0.0;
  double tau_qsl = 0.0;
  double delta_tau = 0.0;
};

inline double euclidean_distance_closed(DampingParameter p_tau, Rapidity r) {
  return distance_closed_at(p_tau.value(), accel_factor(r).value());
}

inline double avg_speed_closed(DampingParameter p_tau, Rapidity r) {
  return avg_speed_closed_at(p_tau.value(), accel_factor(r).value());
}

// Full closed-form evaluation at one (p, r) point.  delta_tau compares
// against the non-relativistic a = 1 value, so delta_tau(r = 0) is exactly
// zero (accel_factor(0) is exactly 1 through the series branch).
inline QsltResult qslt_closed(DampingParameter p_tau, Rapidity r) {
  const double a = accel_factor(r).value();
  QsltResult out;
  out.p_tau = p_tau.value();
  out.r = r.value();
  out.distance = distance_closed_at(p_tau.value(), a);
  out.avg_speed = avg_speed_closed_at(p_tau.value(), a);
  out.tau_qsl = qslt_closed_at(p_tau.value(), a);
  out.delta_tau = out.tau_qsl - qslt_closed_at(p_tau.value(), 1.0);
  return out;
}

// Phase-damping QSLT (1 - sqrt(1-q)) / (1 - sqrt(q)); independent of r.
// Exceeds 1 for q > 1/2, so callers surface a validity flag there instead of
// clamping.  Diverges at q = 1.
inline double phase_qslt(DampingParameter q_tau) {
  const double q = q_tau.value();
  if (q == 1.0) {
    throw DivergenceError("phase_qslt diverges at q_tau = 1");
  }
  return (1.0 - std::sqrt(1.0 - q)) / (1.0 - std::sqrt(q));
}

}  // namespace unruh_qsl
