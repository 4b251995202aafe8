// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end numeric pipeline used as the independent check on every closed
// form in qslt.hpp: build the truncated joint state, apply a Kraus channel,
// contract to the effective qubit, take the Hilbert-Schmidt norm, and
// integrate the path speed by adaptive quadrature.  Nothing here evaluates a
// polylogarithm or one of the closed-form expressions.
//
// The path derivative is analytic.  Writing the damped state as
//
//   rho(p) = |0><0| (x) M_nn + (1-p) |0><0| (x) M_1 + p |1><1| (x) M_1
//            + sqrt(p) (coherence band + h.c.),          M_1 = M_{n+1,n+1},
//
// d rho/dp has block coefficients (-1, +1, 1/(2 sqrt(p))), so its effective
// contraction assembles linearly from the contraction of the undamped state.
// Quadrature runs in u = sqrt(p), where the integrand of the u-path
// derivative is bounded down to p = 0.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "unruh_qsl/channels.hpp"
#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/qslt.hpp"
#include "unruh_qsl/quadrature.hpp"
#include "unruh_qsl/rindler_state.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

struct OracleConfig {
  double trace_tol = 1e-12;
  double quad_tol = 1e-11;
  // Direct construction above r = 3 needs Fock spaces beyond the hard cap;
  // raise this only deliberately.
  double r_cap = 3.0;
  // Sample count for the finite-difference derivative cross-check.
  int path_steps = 9;

  void validate() const {
    if (!(trace_tol > 0.0) || !(quad_tol > 0.0)) {
      throw DomainError("OracleConfig tolerances must be positive");
    }
    if (!(r_cap >= 0.0) || path_steps < 2) {
      throw DomainError("OracleConfig requires r_cap >= 0 and path_steps >= 2");
    }
  }
};

// Analytic d rho(p)/dp of the amplitude-damped state, materialised as a dense
// joint operator.  Test support for the finite-difference invariant; the
// quadrature path never builds this.
inline Eigen::MatrixXcd amplitude_path_derivative(const JointState& state,
                                                  double p) {
  if (!(p > 0.0) || p > 1.0) {
    throw DomainError("amplitude_path_derivative requires 0 < p <= 1");
  }
  const Eigen::Index m = state.fock_dim();
  const auto& rho = state.matrix();
  const double coh = 0.5 / std::sqrt(p);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (Eigen::Index n = 0; n < m; ++n) {
    d(n, n) = -rho(m + n, m + n);
    d(m + n, m + n) = rho(m + n, m + n);
  }
  for (Eigen::Index n = 0; n + 1 < m; ++n) {
    d(m + n + 1, n) = coh * rho(m + n + 1, n);
    d(n, m + n + 1) = coh * rho(n, m + n + 1);
  }
  return d;
}

// Entrywise relative deviation between the analytic path derivative and a
// central finite difference of the channel output at the given step.
inline double max_fd_relative_deviation(const JointState& state, double p,
                                        double step = 1e-6) {
  if (!(p - step > 0.0) || !(p + step < 1.0)) {
    throw DomainError("max_fd_relative_deviation: p +/- step leaves (0, 1)");
  }
  const JointState hi =
      apply_to_alice(state, amplitude_damping(DampingParameter(p + step)));
  const JointState lo =
      apply_to_alice(state, amplitude_damping(DampingParameter(p - step)));
  const Eigen::MatrixXcd fd = (hi.matrix() - lo.matrix()) / (2.0 * step);
  const Eigen::MatrixXcd an = amplitude_path_derivative(state, p);
  const double scale = an.cwiseAbs().maxCoeff();
  return (fd - an).cwiseAbs().maxCoeff() / scale;
}

// One rapidity's worth of pipeline: the state is built once and shared by
// the distance, speed and ratio evaluations.
class Oracle {
 public:
  Oracle(Rapidity r, OracleConfig cfg = {},
         std::optional<FockCutoff> cutoff = std::nullopt)
      : cfg_(cfg),
        state_(make_state(r, cfg, cutoff)),
        base_(contract_effective(state_.matrix())) {}

  const JointState& state() const { return state_; }
  const OracleConfig& config() const { return cfg_; }

  // hs_norm of the contracted difference rho - rho(p); evaluated lazily, the
  // full-space difference is never stored.
  double distance(DampingParameter p_tau) const {
    const JointState damped =
        apply_to_alice(state_, amplitude_damping(p_tau));
    return hs_norm(contract_effective(state_.matrix() - damped.matrix()));
  }

  // Time-averaged speed: integral over u = sqrt(p) of the Hilbert-Schmidt
  // norm of the contracted u-path derivative (tau = 1).
  double avg_speed(DampingParameter p_tau) const {
    if (p_tau.value() == 1.0) return 0.0;
    const double t1 = base_.e11.real();
    const std::complex<double> off = base_.e10;
    auto integrand = [t1, off](double u) {
      EffectiveQubit d;
      d.e00 = -2.0 * u * t1;
      d.e11 = 2.0 * u * t1;
      d.e10 = off;
      d.e01 = std::conj(off);
      return hs_norm(d);
    };
    return integrate_adaptive(integrand, std::sqrt(p_tau.value()), 1.0,
                              cfg_.quad_tol);
  }

  double qslt(DampingParameter p_tau) const {
    if (p_tau.value() == 1.0) {
      throw DivisionByZeroError(
          "qslt is 0/0 at p_tau = 1: the state never evolves");
    }
    return distance(p_tau) / avg_speed(p_tau);
  }

  double phase_distance(DampingParameter q_tau) const {
    const JointState damped = apply_to_alice(state_, phase_damping(q_tau));
    return hs_norm(contract_effective(state_.matrix() - damped.matrix()));
  }

  // Path q_t = t q_tau, t in [0, 1]; the coherence coefficient sqrt(1 - q_t)
  // gives |d rho/dt| proportional to 1/sqrt(1 - t q_tau).
  double phase_avg_speed(DampingParameter q_tau) const {
    const double q = q_tau.value();
    if (q == 0.0) return 0.0;
    if (q == 1.0) {
      throw DomainError("phase_avg_speed: path derivative diverges at q_tau = 1");
    }
    const std::complex<double> off = base_.e10;
    auto integrand = [q, off](double t) {
      const double c = 0.5 * q / std::sqrt(1.0 - t * q);
      EffectiveQubit d;
      d.e10 = c * off;
      d.e01 = std::conj(d.e10);
      return hs_norm(d);
    };
    return integrate_adaptive(integrand, 0.0, 1.0, cfg_.quad_tol);
  }

  double phase_qslt(DampingParameter q_tau) const {
    if (q_tau.value() == 0.0) {
      throw DivisionByZeroError(
          "phase qslt is 0/0 at q_tau = 0: the state never evolves");
    }
    return phase_distance(q_tau) / phase_avg_speed(q_tau);
  }

 private:
  static JointState make_state(Rapidity r, const OracleConfig& cfg,
                               const std::optional<FockCutoff>& cutoff) {
    cfg.validate();
    if (r.value() > cfg.r_cap) {
      throw DomainError("oracle rapidity " + std::to_string(r.value()) +
                        " exceeds r_cap " + std::to_string(cfg.r_cap) +
                        "; raise r_cap explicitly to override");
    }
    return build_reduced_state(
        r, cutoff ? *cutoff : choose_cutoff(r, cfg.trace_tol));
  }

  OracleConfig cfg_;
  JointState state_;
  EffectiveQubit base_;
};

inline double distance_numeric(DampingParameter p_tau, Rapidity r,
                               const OracleConfig& cfg = {}) {
  return Oracle(r, cfg).distance(p_tau);
}

inline double avg_speed_numeric(DampingParameter p_tau, Rapidity r,
                                const OracleConfig& cfg = {}) {
  return Oracle(r, cfg).avg_speed(p_tau);
}

inline double qslt_numeric(DampingParameter p_tau, Rapidity r,
                           const OracleConfig& cfg = {}) {
  return Oracle(r, cfg).qslt(p_tau);
}

inline double phase_qslt_numeric(DampingParameter q_tau, Rapidity r,
                                 const OracleConfig& cfg = {}) {
  return Oracle(r, cfg).phase_qslt(q_tau);
}

}  // namespace unruh_qsl
