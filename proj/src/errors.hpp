/*
 * (C) Copyright 2026 the asrel authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <stdexcept>

namespace asrel {

// Malformed or unusable input text (path files, org tables, JSON, wcnf).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The relaxation failed to reach the gradient tolerance within its budget.
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace asrel
