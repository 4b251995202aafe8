// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Truncated joint density matrix of the inertial qubit (Alice) and the
// accessible region-I Rindler mode (Bob), for a Bell pair whose second party
// is uniformly accelerated.  With t = tanh^2 r and c = cosh r the nonzero
// entries are
//
//   <0,n | rho | 0,n>     = t^n / (2 c^2)
//   <1,n+1 | rho | 1,n+1> = (n+1) t^n / (2 c^4)
//   <1,n+1 | rho | 0,n>   = sqrt(n+1) t^n / (2 c^3)   (+ conjugate mirror)
//
// Basis convention (shared by every module): index = alice * (n_max+1) + n,
// Alice-major.  The matrix is stored dense; it is banded, and dimensions stay
// moderate for the rapidity range the numeric pipeline covers (r <= 3).

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <utility>

#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

// Largest Fock truncation choose_cutoff will accept.
inline constexpr int kFockHardCap = 5000;

// Retained Fock levels 0..n_max on the Bob factor; joint dimension 2(n_max+1).
class FockCutoff {
 public:
  explicit FockCutoff(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
      throw DomainError("FockCutoff requires n_max >= 1, got " +
                        std::to_string(n_max));
    }
  }

  int n_max() const { return n_max_; }

 private:
  int n_max_;
};

// Trace omitted by truncating at n_max.  Both block tails sum in closed form
// (c^2 (1-t) = 1 collapses the prefactors):
//
//   sum_{n>N} t^n / (2 c^2)          = t^{N+1} / 2
//   sum_{n>=N} (n+1) t^n / (2 c^4)   = t^N ((N+1)(1-t) + t) / 2
inline double truncation_tail(double tanh_sq, int n_max) {
  const double t = tanh_sq;
  if (t == 0.0) return 0.0;
  const double tn = std::pow(t, n_max);
  return 0.5 * tn * t + 0.5 * tn * ((n_max + 1) * (1.0 - t) + t);
}

// Smallest n_max whose omitted trace is at most trace_tol.
inline FockCutoff choose_cutoff(Rapidity r, double trace_tol) {
  if (!std::isfinite(trace_tol) || trace_tol <= 0.0 || trace_tol >= 1.0) {
    throw DomainError("choose_cutoff requires 0 < trace_tol < 1, got " +
                      std::to_string(trace_tol));
  }
  const double th = std::tanh(r.value());
  const double t = th * th;
  for (int n = 1; n <= kFockHardCap; ++n) {
    if (truncation_tail(t, n) <= trace_tol) return FockCutoff(n);
  }
  throw CutoffError("choose_cutoff: n_max beyond hard cap " +
                    std::to_string(kFockHardCap) + " at r = " +
                    std::to_string(r.value()) + ", trace_tol = " +
                    std::to_string(trace_tol));
}

// Immutable joint density matrix with its construction metadata.
class JointState {
 public:
  JointState(Eigen::MatrixXcd matrix, Rapidity r, FockCutoff cutoff)
      : matrix_(std::move(matrix)), rapidity_(r), cutoff_(cutoff) {
    const Eigen::Index d = 2 * (cutoff_.n_max() + 1);
    if (matrix_.rows() != d || matrix_.cols() != d) {
      throw DimensionError("JointState matrix is " +
                           std::to_string(matrix_.rows()) + "x" +
                           std::to_string(matrix_.cols()) + ", cutoff needs " +
                           std::to_string(d));
    }
    const double tr = matrix_.trace().real();
    if (!std::isfinite(tr) || tr > 1.0 + 1e-12 || tr < 0.0 ||
        std::abs(matrix_.trace().imag()) > 1e-13) {
      throw ConstructionError("JointState trace out of range: " +
                              std::to_string(tr));
    }
  }

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Rapidity rapidity() const { return rapidity_; }
  FockCutoff cutoff() const { return cutoff_; }

  Eigen::Index fock_dim() const { return cutoff_.n_max() + 1; }
  Eigen::Index dim() const { return 2 * fock_dim(); }
  Eigen::Index index(int alice, int n) const { return alice * fock_dim() + n; }

  double trace_real() const { return matrix_.trace().real(); }

 private:
  Eigen::MatrixXcd matrix_;
  Rapidity rapidity_;
  FockCutoff cutoff_;
};

inline JointState build_reduced_state(Rapidity r, FockCutoff cutoff) {
  const int n_max = cutoff.n_max();
  const Eigen::Index m = n_max + 1;
  const double th = std::tanh(r.value());
  const double t = th * th;
  const double c = std::cosh(r.value());
  const double c2 = c * c;

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  double tn = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    rho(n, n) = tn / (2.0 * c2);
    if (n < n_max) {
      const double pop = (n + 1) * tn / (2.0 * c2 * c2);
      const double coh = std::sqrt(n + 1.0) * tn / (2.0 * c2 * c);
      rho(m + n + 1, m + n + 1) = pop;
      rho(m + n + 1, n) = coh;
      rho(n, m + n + 1) = coh;
    }
    tn *= t;
  }
  return JointState(std::move(rho), r, cutoff);
}

// 1 - Tr(rho), clamped at zero against last-ulp rounding.
inline double trace_deficit(const JointState& state) {
  return std::max(0.0, 1.0 - state.trace_real());
}

// Debug dump of the nonzero entries as "row,col,re,im" triplets.
inline void write_state_csv(const JointState& state, std::ostream& out) {
  out << "row,col,re,im\n";
  const auto& m = state.matrix();
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::complex<double> v = m(i, j);
      if (v == std::complex<double>(0.0, 0.0)) continue;
      std::snprintf(buf, sizeof buf, "%lld,%lld,%.17g,%.17g\n",
                    static_cast<long long>(i), static_cast<long long>(j),
                    v.real(), v.imag());
      out << buf;
    }
  }
}

}  // namespace unruh_qsl
