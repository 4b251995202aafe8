// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>
#include <utility>

#include "unruh_qsl/errors.hpp"

namespace unruh_qsl {

// Adaptive Gauss-Kronrod integration with an absolute-tolerance guarantee:
// throws QuadratureError if the reported error estimate exceeds abs_tol.
template <typename F>
double integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                          unsigned max_depth = 15) {
  if (!(abs_tol > 0.0)) {
    throw DomainError("integrate_adaptive requires abs_tol > 0");
  }
  if (lo == hi) return 0.0;
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), lo, hi, max_depth, 1e-13, &err);
  if (!(err <= abs_tol) || !std::isfinite(value)) {
    throw QuadratureError("integrate_adaptive: error estimate " +
                          std::to_string(err) + " above tolerance " +
                          std::to_string(abs_tol));
  }
  return value;
}

}  // namespace unruh_qsl
