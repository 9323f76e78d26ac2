// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include <cmath>

namespace semlink {

// All computation is done in linear units (W, W/Hz, power ratios).
// dB / dBm appear only at the configuration and reporting boundary.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double mw_to_watt(double mw) { return mw * 1e-3; }

} // namespace semlink
