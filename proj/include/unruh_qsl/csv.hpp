// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "unruh_qsl/analysis.hpp"
#include "unruh_qsl/errors.hpp"

namespace unruh_qsl {

inline constexpr const char* kSweepCsvHeader =
    "p,r,a_r,distance,avg_speed,tau_qsl,delta_tau";

// 12 significant digits: compact enough to diff, fine enough that re-parsing
// reproduces the value to ~1e-11 relative.
inline std::string format_sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string sweep_csv_row(const SweepRecord& rec) {
  return format_sig12(rec.p) + "," + format_sig12(rec.r) + "," +
         format_sig12(rec.a_r) + "," + format_sig12(rec.distance) + "," +
         format_sig12(rec.avg_speed) + "," + format_sig12(rec.tau_qsl) + "," +
         format_sig12(rec.delta_tau);
}

inline void write_sweep_csv(std::ostream& out,
                            std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : records) out << sweep_csv_row(rec) << '\n';
}

inline std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw GridError("parse_sweep_csv: missing or unexpected header");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    SweepRecord rec;
    char sep = ',';
    row >> rec.p >> sep >> rec.r >> sep >> rec.a_r >> sep >> rec.distance >>
        sep >> rec.avg_speed >> sep >> rec.tau_qsl >> sep >> rec.delta_tau;
    if (row.fail()) {
      throw GridError("parse_sweep_csv: malformed row: " + line);
    }
    records.push_back(rec);
  }
  return records;
}

}  // namespace unruh_qsl
