// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Sweeps of delta_tau(p, r) = tau(p, r) - tau(p, 0) over rapidity grids,
// regime classification of the resulting curves, and bisection for the two
// critical damping parameters separating the regimes:
//
//   p < p_c0          delta_tau falls monotonically with r
//   p_c0 < p < p_c1   delta_tau dips to an interior minimum, then rises
//   p > p_c1          delta_tau grows monotonically
//
// All curves flatten towards a plateau as a(r) approaches sqrt(pi)/2.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/parallel.hpp"
#include "unruh_qsl/qslt.hpp"
#include "unruh_qsl/specfun.hpp"
#include "unruh_qsl/types.hpp"

namespace unruh_qsl {

// Dead-band below which a finite difference does not count as a move.
inline constexpr double kClassifyDeadband = 1e-9;

// Classification needs enough resolution to see an interior minimum.
inline constexpr std::size_t kClassifyMinPoints = 50;

enum class RegimeLabel { MonotoneIncreasing, MonotoneDecreasing, DipThenRise, Flat };

inline const char* to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::MonotoneIncreasing: return "MonotoneIncreasing";
    case RegimeLabel::MonotoneDecreasing: return "MonotoneDecreasing";
    case RegimeLabel::DipThenRise: return "DipThenRise";
    case RegimeLabel::Flat: return "Flat";
  }
  return "unknown";
}

struct SweepRecord {
  double p = 0.0;
  double r = 0.0;
  double a_r = 0.0;
  double distance = 0.0;
  double avg_speed = 0.0;
  double tau_qsl = 0.0;
  double delta_tau = 0.0;
};

inline SweepRecord make_sweep_record(DampingParameter p, Rapidity r) {
  const QsltResult q = qslt_closed(p, r);
  return SweepRecord{q.p_tau, q.r,      accel_factor(r).value(), q.distance,
                     q.avg_speed, q.tau_qsl, q.delta_tau};
}

inline std::vector<double> make_r_grid(double r_min, double r_max, int steps) {
  if (steps < 1 || !(r_max >= r_min) || r_min < 0.0) {
    throw GridError("make_r_grid: need steps >= 1 and 0 <= r_min <= r_max");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid[0] = r_min;
    return grid;
  }
  const double h = (r_max - r_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = r_min + h * i;
  grid.back() = r_max;
  return grid;
}

// One record per grid point, computed in parallel and returned in grid
// order.  The grid must ascend from exactly 0, so delta_tau starts at 0.
inline std::vector<SweepRecord> sweep_delta_tau(DampingParameter p,
                                                std::span<const double> r_grid) {
  if (r_grid.empty() || r_grid.front() != 0.0) {
    throw GridError("sweep_delta_tau: grid must start at r = 0");
  }
  for (std::size_t i = 0; i + 1 < r_grid.size(); ++i) {
    if (!(r_grid[i] < r_grid[i + 1])) {
      throw GridError("sweep_delta_tau: grid must ascend strictly");
    }
  }
  std::vector<SweepRecord> records(r_grid.size());
  parallel_for_index(r_grid.size(), [&](std::size_t i) {
    records[i] = make_sweep_record(p, Rapidity(r_grid[i]));
  });
  return records;
}

// Classifies a sampled curve by the signs of its finite differences, with
// the dead-band eps absorbing numerical wiggle.  DipThenRise demands every
// significant descent to precede every significant ascent, plus an interior
// minimum at least eps below both endpoints.
inline RegimeLabel classify_sequence(std::span<const double> values,
                                     double eps = kClassifyDeadband) {
  if (values.size() < kClassifyMinPoints) {
    throw GridError("classify_sequence: need at least " +
                    std::to_string(kClassifyMinPoints) + " grid points, got " +
                    std::to_string(values.size()));
  }
  double total_variation = 0.0;
  bool has_pos = false, has_neg = false;
  std::size_t first_pos = 0, last_neg = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    total_variation += std::abs(d);
    if (d > eps) {
      if (!has_pos) first_pos = i;
      has_pos = true;
    } else if (d < -eps) {
      last_neg = i;
      has_neg = true;
    }
  }
  if (total_variation < eps || (!has_pos && !has_neg)) return RegimeLabel::Flat;
  if (has_pos && !has_neg) return RegimeLabel::MonotoneIncreasing;
  if (has_neg && !has_pos) return RegimeLabel::MonotoneDecreasing;
  const std::size_t min_idx = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  if (first_pos > last_neg && min_idx > 0 && min_idx + 1 < values.size() &&
      values.front() - values[min_idx] > eps &&
      values.back() - values[min_idx] > eps) {
    return RegimeLabel::DipThenRise;
  }
  throw GridError("classify_sequence: curve is neither monotone nor a single dip");
}

inline RegimeLabel classify_regime(std::span<const SweepRecord> records,
                                   double eps = kClassifyDeadband) {
  std::vector<double> deltas(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) deltas[i] = records[i].delta_tau;
  return classify_sequence(deltas, eps);
}

struct CriticalSearchConfig {
  double p_decreasing = 1e-4;  // must classify MonotoneDecreasing
  double p_increasing = 0.1;   // must classify MonotoneIncreasing
  double rel_width = 1e-3;     // bisection stops at this relative bracket width
  int seed_scan_points = 25;   // log-spaced scan for a DipThenRise seed
  double r_min = 0.0;
  double r_max = 5.0;
  int r_steps = 200;
  double eps_class = kClassifyDeadband;
};

struct CriticalPair {
  double p_c0 = 0.0;
  double p_c1 = 0.0;
  double residual = 0.0;  // final relative bracket width
};

// Bracket widths per bisection iteration, for convergence diagnostics.
struct BisectionTrace {
  std::vector<double> widths_c0;
  std::vector<double> widths_c1;
};

// Locates the two regime boundaries by bisecting the classification label
// over p.  Since tau depends on r only through a(r), each classification
// reuses one precomputed a(r) grid.
inline CriticalPair find_critical_pair(const CriticalSearchConfig& cfg = {},
                                       BisectionTrace* trace = nullptr) {
  if (!(cfg.p_decreasing > 0.0) || !(cfg.p_increasing < 1.0) ||
      !(cfg.p_decreasing < cfg.p_increasing) || !(cfg.rel_width > 0.0) ||
      cfg.seed_scan_points < 3) {
    throw DomainError("find_critical_pair: malformed search configuration");
  }

  const std::vector<double> r_grid = make_r_grid(cfg.r_min, cfg.r_max, cfg.r_steps);
  std::vector<double> a_grid(r_grid.size());
  parallel_for_index(r_grid.size(), [&](std::size_t i) {
    a_grid[i] = accel_factor(Rapidity(r_grid[i])).value();
  });

  auto label_at = [&](double p) {
    std::vector<double> deltas(a_grid.size());
    const double tau0 = qslt_closed_at(p, 1.0);
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
      deltas[i] = qslt_closed_at(p, a_grid[i]) - tau0;
    }
    return classify_sequence(deltas, cfg.eps_class);
  };

  if (label_at(cfg.p_decreasing) != RegimeLabel::MonotoneDecreasing) {
    throw BracketError("find_critical_pair: lower bound p = " +
                       std::to_string(cfg.p_decreasing) +
                       " does not classify MonotoneDecreasing");
  }
  if (label_at(cfg.p_increasing) != RegimeLabel::MonotoneIncreasing) {
    throw BracketError("find_critical_pair: upper bound p = " +
                       std::to_string(cfg.p_increasing) +
                       " does not classify MonotoneIncreasing");
  }

  // A DipThenRise seed splits the interval into the two label boundaries.
  double seed = 0.0;
  bool found_seed = false;
  const double ratio = cfg.p_increasing / cfg.p_decreasing;
  for (int i = 1; i < cfg.seed_scan_points && !found_seed; ++i) {
    const double p =
        cfg.p_decreasing *
        std::pow(ratio, static_cast<double>(i) / (cfg.seed_scan_points - 1));
    if (label_at(p) == RegimeLabel::DipThenRise) {
      seed = p;
      found_seed = true;
    }
  }
  if (!found_seed) {
    throw BracketError("find_critical_pair: no DipThenRise point between the bounds");
  }

  // Geometric bisection of "predicate flips between lo and hi".
  auto bisect = [&](double lo, double hi, auto&& lo_side,
                    std::vector<double>* widths) {
    double width = (hi - lo) / (0.5 * (hi + lo));
    while (width > cfg.rel_width) {
      if (widths) widths->push_back(width);
      const double mid = std::sqrt(lo * hi);
      if (lo_side(label_at(mid))) {
        lo = mid;
      } else {
        hi = mid;
      }
      width = (hi - lo) / (0.5 * (hi + lo));
    }
    if (widths) widths->push_back(width);
    return std::pair{0.5 * (lo + hi), width};
  };

  const auto [p_c0, w0] = bisect(
      cfg.p_decreasing, seed,
      [](RegimeLabel l) { return l == RegimeLabel::MonotoneDecreasing; },
      trace ? &trace->widths_c0 : nullptr);
  const auto [p_c1, w1] = bisect(
      seed, cfg.p_increasing,
      [](RegimeLabel l) { return l != RegimeLabel::MonotoneIncreasing; },
      trace ? &trace->widths_c1 : nullptr);

  CriticalPair out{p_c0, p_c1, std::max(w0, w1)};
  if (!(0.0 < out.p_c0 && out.p_c0 < out.p_c1 && out.p_c1 < 1.0)) {
    throw BracketError("find_critical_pair: boundaries out of order");
  }
  return out;
}

struct PlateauConfig {
  double r_finite = 5.0;
  double r_check = 6.0;
};

struct PlateauReport {
  double delta_tau_finite = 0.0;  // at r_finite
  double delta_tau_check = 0.0;   // at r_check
  double delta_tau_limit = 0.0;   // with a = sqrt(pi)/2
};

// The large-acceleration plateau of delta_tau(p, r): the closed form at two
// large rapidities next to the a -> sqrt(pi)/2 limiting value.
inline PlateauReport plateau_value(DampingParameter p,
                                   const PlateauConfig& cfg = {}) {
  const double tau0 = qslt_closed_at(p.value(), 1.0);
  PlateauReport rep;
  rep.delta_tau_finite =
      qslt_closed_at(p.value(), accel_factor(Rapidity(cfg.r_finite)).value()) - tau0;
  rep.delta_tau_check =
      qslt_closed_at(p.value(), accel_factor(Rapidity(cfg.r_check)).value()) - tau0;
  rep.delta_tau_limit = qslt_closed_at(p.value(), kSqrtPiOverTwo) - tau0;
  return rep;
}

}  // namespace unruh_qsl
