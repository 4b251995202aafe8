// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace unruh_qsl {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series / expansion could not reach the requested accuracy.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// The Fock truncation needed to honour a trace tolerance exceeds the hard cap.
class CutoffError : public Error {
 public:
  using Error::Error;
};

// Operator shapes do not match the qubit (x) Fock layout.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A constructed state violates one of its own invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Adaptive integration terminated above the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Root bracketing failed: labels at the search bounds are not the expected ones.
class BracketError : public Error {
 public:
  using Error::Error;
};

// A sweep grid is unusable (too short, unsorted, wrong origin).
class GridError : public Error {
 public:
  using Error::Error;
};

// Ratio of two vanishing quantities (no evolution took place).
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// The evaluated expression diverges at the requested point.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace unruh_qsl
