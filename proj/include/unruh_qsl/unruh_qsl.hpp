// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.

#pragma once

#include "unruh_qsl/analysis.hpp"
#include "unruh_qsl/channels.hpp"
#include "unruh_qsl/csv.hpp"
#include "unruh_qsl/errors.hpp"
#include "unruh_qsl/oracle.hpp"
#include "unruh_qsl/parallel.hpp"
#include "unruh_qsl/qslt.hpp"
#include "unruh_qsl/quadrature.hpp"
#include "unruh_qsl/rindler_state.hpp"
#include "unruh_qsl/specfun.hpp"
#include "unruh_qsl/types.hpp"
