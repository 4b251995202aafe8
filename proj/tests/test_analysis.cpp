// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "unruh_qsl/analysis.hpp"

using namespace unruh_qsl;

namespace {

RegimeLabel label_on_grid(double p, int steps) {
  const auto grid = make_r_grid(0.0, 5.0, steps);
  const auto records = sweep_delta_tau(DampingParameter(p), grid);
  return classify_regime(records);
}

}  // namespace

TEST_CASE("r grids are inclusive and validated", "[analysis]") {
  const auto grid = make_r_grid(0.0, 5.0, 200);
  REQUIRE(grid.size() == 200);
  REQUIRE(grid.front() == 0.0);
  REQUIRE(grid.back() == 5.0);
  REQUIRE(make_r_grid(0.5, 9.0, 1) == std::vector<double>{0.5});
  REQUIRE_THROWS_AS(make_r_grid(0.0, 5.0, 0), GridError);
  REQUIRE_THROWS_AS(make_r_grid(2.0, 1.0, 10), GridError);
  REQUIRE_THROWS_AS(make_r_grid(-1.0, 1.0, 10), GridError);
}

TEST_CASE("sweeps demand an ascending grid anchored at zero", "[analysis]") {
  REQUIRE_THROWS_AS(
      sweep_delta_tau(DampingParameter(0.1), std::vector<double>{1.0, 2.0}),
      GridError);
  REQUIRE_THROWS_AS(
      sweep_delta_tau(DampingParameter(0.1), std::vector<double>{0.0, 2.0, 1.0}),
      GridError);

  const auto records =
      sweep_delta_tau(DampingParameter(0.1), make_r_grid(0.0, 5.0, 64));
  REQUIRE(records.size() == 64);
  REQUIRE(records.front().delta_tau == 0.0);
  REQUIRE(records.front().a_r == 1.0);
}

TEST_CASE("strong damping leaves no relativistic trace", "[analysis]") {
  const auto records =
      sweep_delta_tau(DampingParameter(0.9999), make_r_grid(0.0, 5.0, 200));
  for (const auto& rec : records) {
    REQUIRE(std::abs(rec.delta_tau) <= 1e-3);
  }
}

TEST_CASE("delta_tau rises monotonically for p = 0.1", "[analysis]") {
  const auto records =
      sweep_delta_tau(DampingParameter(0.1), make_r_grid(0.0, 5.0, 200));
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    REQUIRE(records[i + 1].delta_tau - records[i].delta_tau >= -1e-12);
  }
  REQUIRE(records.front().delta_tau >= -1e-12);
  REQUIRE(classify_regime(records) == RegimeLabel::MonotoneIncreasing);
}

TEST_CASE("the three damping regimes classify as expected", "[analysis]") {
  REQUIRE(label_on_grid(1e-3, 200) == RegimeLabel::MonotoneDecreasing);
  REQUIRE(label_on_grid(5e-3, 200) == RegimeLabel::DipThenRise);
  REQUIRE(label_on_grid(0.5, 200) == RegimeLabel::MonotoneIncreasing);
}

TEST_CASE("delta_tau falls monotonically for weak damping", "[analysis]") {
  const auto records =
      sweep_delta_tau(DampingParameter(1e-4), make_r_grid(0.0, 5.0, 200));
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    REQUIRE(records[i + 1].delta_tau - records[i].delta_tau <= 1e-12);
  }
  REQUIRE(classify_regime(records) == RegimeLabel::MonotoneDecreasing);
}

TEST_CASE("classification is stable under grid refinement", "[analysis]") {
  for (double p : {1e-3, 5e-3, 0.1}) {
    REQUIRE(label_on_grid(p, 200) == label_on_grid(p, 400));
  }
}

TEST_CASE("classifier handles synthetic sequences", "[analysis]") {
  const std::vector<double> flat(60, 0.25);
  REQUIRE(classify_sequence(flat) == RegimeLabel::Flat);

  std::vector<double> rising(60), falling(60), vee(61), hump(61);
  for (int i = 0; i < 60; ++i) {
    rising[i] = 1e-6 * i;
    falling[i] = -1e-6 * i;
  }
  for (int i = 0; i <= 60; ++i) {
    vee[i] = 1e-6 * std::abs(i - 30);
    hump[i] = -1e-6 * std::abs(i - 30);
  }
  REQUIRE(classify_sequence(rising) == RegimeLabel::MonotoneIncreasing);
  REQUIRE(classify_sequence(falling) == RegimeLabel::MonotoneDecreasing);
  REQUIRE(classify_sequence(vee) == RegimeLabel::DipThenRise);
  REQUIRE_THROWS_AS(classify_sequence(hump), GridError);  // rise-then-fall

  const std::vector<double> too_short(30, 0.0);
  REQUIRE_THROWS_AS(classify_sequence(too_short), GridError);
}

TEST_CASE("classification agrees with the a-parametrised traversal", "[analysis]") {
  // tau depends on r only through a(r), so sweeping a downward from a(0) = 1
  // to a(5) must classify identically.
  const double a5 = accel_factor(Rapidity(5.0)).value();
  for (double p : {1e-3, 5e-3, 0.1}) {
    const double tau0 = qslt_closed_at(p, 1.0);
    std::vector<double> deltas(200);
    for (int i = 0; i < 200; ++i) {
      const double a = 1.0 + (a5 - 1.0) * i / 199.0;
      deltas[static_cast<std::size_t>(i)] = qslt_closed_at(p, a) - tau0;
    }
    REQUIRE(classify_sequence(deltas) == label_on_grid(p, 200));
  }
}

TEST_CASE("critical parameters land in the reference bands", "[analysis]") {
  BisectionTrace trace;
  const CriticalPair pair = find_critical_pair(CriticalSearchConfig{}, &trace);

  REQUIRE(pair.p_c0 >= 7.5e-4);
  REQUIRE(pair.p_c0 <= 3e-3);
  REQUIRE(pair.p_c1 >= 7.5e-3);
  REQUIRE(pair.p_c1 <= 3e-2);
  REQUIRE(pair.p_c0 < pair.p_c1);
  REQUIRE(pair.residual <= 1e-3);

  for (const auto* widths : {&trace.widths_c0, &trace.widths_c1}) {
    REQUIRE(widths->size() >= 2);
    for (std::size_t i = 0; i + 1 < widths->size(); ++i) {
      REQUIRE((*widths)[i + 1] < (*widths)[i]);
    }
    REQUIRE(widths->back() <= 1e-3);
  }
}

TEST_CASE("critical search rejects wrong brackets", "[analysis]") {
  CriticalSearchConfig cfg;
  cfg.p_decreasing = 0.05;  // classifies MonotoneIncreasing, not Decreasing
  REQUIRE_THROWS_AS(find_critical_pair(cfg), BracketError);

  CriticalSearchConfig bad;
  bad.rel_width = 0.0;
  REQUIRE_THROWS_AS(find_critical_pair(bad), DomainError);
}

TEST_CASE("delta_tau plateaus at large acceleration", "[analysis]") {
  for (double p : {1e-4, 5e-3, 0.1}) {
    const PlateauReport rep = plateau_value(DampingParameter(p));
    REQUIRE(std::abs(rep.delta_tau_finite - rep.delta_tau_check) < 1e-3);
    REQUIRE(std::abs(rep.delta_tau_check - rep.delta_tau_limit) < 1e-3);
  }
  // The limiting factor is the one accel_factor itself saturates to.
  REQUIRE(std::abs(accel_factor(Rapidity(8.0)).value() - kSqrtPiOverTwo) < 1e-4);

  const PlateauReport still = plateau_value(DampingParameter(1.0));
  REQUIRE(still.delta_tau_finite == 0.0);
  REQUIRE(still.delta_tau_check == 0.0);
  REQUIRE(still.delta_tau_limit == 0.0);
}
