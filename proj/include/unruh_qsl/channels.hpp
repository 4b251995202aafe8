// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Kraus pairs for amplitude and phase damping on the inertial qubit, and
// their action on the qubit factor of a JointState:
//
//   rho' = sum_i (K_i (x) I) rho (K_i (x) I)^dagger.
//
// Applied to the Rindler-reduced state with amplitude damping this yields
//
//   rho(p) = |0><0| (x) M_nn + sqrt(p) (|1><0| (x) M_{n+1,n} + h.c.)
//          + (p |1><1| + (1-p) |0><0|) (x) M_{n+1,n+1},
//
// i.e. the 11 population block scales by p, its loss feeds the 00 block, and
// the coherences scale by sqrt(p).

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/rindler_state.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

struct KrausPair {
  Eigen::Matrix2cd k0;
  Eigen::Matrix2cd k1;

  // max-norm of sum_i K_i^dagger K_i - I; <= 1e-14 for the built-in channels.
  double completeness_residual() const {
    const Eigen::Matrix2cd s =
        k0.adjoint() * k0 + k1.adjoint() * k1 - Eigen::Matrix2cd::Identity();
    return s.cwiseAbs().maxCoeff();
  }
};

// Excited-population survival p: K0 = diag(1, sqrt(p)), K1 maps |1> -> |0>
// with amplitude sqrt(1-p).  p = 1 is the identity channel.
inline KrausPair amplitude_damping(DampingParameter p) {
  const double sp = std::sqrt(p.value());
  const double sq = std::sqrt(1.0 - p.value());
  KrausPair k;
  k.k0 << 1.0, 0.0, 0.0, sp;
  k.k1 << 0.0, sq, 0.0, 0.0;
  return k;
}

// Dephasing strength q: coherences scale by sqrt(1-q), populations are left
// alone.  K0 = diag(1, sqrt(1-q)), K1 = diag(0, sqrt(q)).
inline KrausPair phase_damping(DampingParameter q) {
  const double s0 = std::sqrt(1.0 - q.value());
  const double s1 = std::sqrt(q.value());
  KrausPair k;
  k.k0 << 1.0, 0.0, 0.0, s0;
  k.k1 << 0.0, 0.0, 0.0, s1;
  return k;
}

// Applies the channel to Alice's factor.  Block form of the sandwich: with
// rho = [[B00, B01], [B10, B11]] in Fock-sized blocks,
//   rho'_{AB} = sum_i sum_{a,b} K_i(A,a) conj(K_i(B,b)) B_{ab}.
inline JointState apply_to_alice(const JointState& state, const KrausPair& kraus) {
  const Eigen::Index m = state.fock_dim();
  const auto& rho = state.matrix();
  if (rho.rows() != 2 * m || rho.cols() != 2 * m) {
    throw DimensionError("apply_to_alice: state matrix does not match cutoff");
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (const auto* k : {&kraus.k0, &kraus.k1}) {
    for (int A = 0; A < 2; ++A) {
      for (int B = 0; B < 2; ++B) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const std::complex<double> c = (*k)(A, a) * std::conj((*k)(B, b));
            if (c == std::complex<double>(0.0, 0.0)) continue;
            out.block(A * m, B * m, m, m).noalias() +=
                c * rho.block(a * m, b * m, m, m);
          }
        }
      }
    }
  }
  return JointState(std::move(out), state.rapidity(), state.cutoff());
}

}  // namespace unruh_qsl
