// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include <stdexcept>
#include <string>

namespace semlink {

/// Raised when a requested operating point cannot be met (quality threshold
/// above the curve maximum, delay target below the zero-retransmission bound,
/// zero-rate conditioning link). Distinct from argument/domain errors so that
/// callers can map it to an "infeasible" outcome instead of a usage bug.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration / input-file problem (bad JSON, unknown key, invalid value).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace semlink
