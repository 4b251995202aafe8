// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "unruh_qsl/errors.hpp"

namespace unruh_qsl {

// Dimensionless acceleration parameter r >= 0 of the uniformly accelerated
// observer, tanh r = exp(-pi Omega) with Omega = |k| c / a.
class Rapidity {
 public:
  explicit Rapidity(double r) : r_(r) {
    if (!std::isfinite(r) || r < 0.0) {
      throw DomainError("Rapidity must be finite and non-negative, got " +
                        std::to_string(r));
    }
  }

  double value() const { return r_; }

 private:
  double r_;
};

// Survival parameter of a damping channel, in [0, 1].
//
// Amplitude damping uses p_t = exp(-Gamma t): p = 1 is noiseless, p = 0 is a
// fully decayed excited population. Note this is inverted relative to the
// common gamma = 1 - p convention.
class DampingParameter {
 public:
  explicit DampingParameter(double v) : v_(v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw DomainError("DampingParameter must lie in [0, 1], got " +
                        std::to_string(v));
    }
  }

  double value() const { return v_; }

 private:
  double v_;
};

}  // namespace unruh_qsl
