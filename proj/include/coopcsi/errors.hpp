// SPDX-License-Identifier: Apache-2.0
//
// coopcsi — decentralized cooperative channel estimation over limited backhaul
// Copyright (C) 2026 The coopcsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace coopcsi {

/// A matrix handed in as a covariance is not Hermitian PSD (or not finite).
class invalid_covariance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector/matrix sizes or ordering do not match the scenario contract.
class dimension_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cellular layout violates the placement constraints (e.g. d < d_0).
class invalid_geometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quantizer model precondition Q_Q <= Gamma violated.
class invalid_quantizer_model : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear system in the fusion construction is numerically singular.
class ill_conditioned_error : public std::runtime_error {
 public:
  ill_conditioned_error(const std::string& what, double condition)
      : std::runtime_error(what + " (condition number " +
                           std::to_string(condition) + ")"),
        condition_number(condition) {}
  double condition_number;
};

/// The first-order MSE approximation is invalid at this rate
/// (information matrix not positive definite).
class approx_out_of_range : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive rate enumeration would exceed the candidate budget.
class too_many_candidates : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration input (JSON, CLI flags, sweep setup).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coopcsi
