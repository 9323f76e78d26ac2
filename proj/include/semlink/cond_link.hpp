// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include <optional>
#include <vector>

namespace semlink {

/// Lossy stream: adaptive MQAM whose achievable rate at a BER target is
///   R = B log2(1 + alpha * snr / (-ln(beta * BER))).
struct CondLinkConfig {
    double alpha = 1.5;
    double beta = 5.0;
    std::vector<int> mod_set = {4, 16, 64}; ///< allowed MQAM orders, increasing

    void validate() const;
};

/// Bit-error-rate operating point for the lossy stream. Must satisfy
/// 0 < value < 1/beta for the rate expression to be defined; the upper end
/// is checked against the CondLinkConfig at the point of use.
struct BerTarget {
    double value;
    explicit BerTarget(double v);
};

/// Achievable rate in bits/second at linear SNR `snr1` (>= 0; 0 gives 0).
double achievable_rate(double snr1, BerTarget ber, double bw_hz, const CondLinkConfig& cfg);

/// Transmission delay |v1| / R of a `cond_bits` payload. Throws
/// infeasible_error when the rate is zero (snr1 == 0).
double cond_delay(double cond_bits, double snr1, BerTarget ber, double bw_hz,
                  const CondLinkConfig& cfg);

/// BER obtained when transmitting at spectral efficiency log2(M) at linear
/// SNR `snr1`: (1/beta) * exp(-alpha * snr1 / (M - 1)).
/// Exact algebraic inverse of achievable_rate at rate B*log2(M).
double ber_at(double snr1, int mod_order, const CondLinkConfig& cfg);

/// Smallest linear SNR at which order M meets the BER target:
/// (M - 1) * (-ln(beta * BER)) / alpha.
double min_snr_for_mod(int mod_order, BerTarget ber, const CondLinkConfig& cfg);

/// Largest order in mod_set whose SNR threshold is met, or nullopt when even
/// the smallest order misses the BER target.
std::optional<int> select_modulation(double snr1, BerTarget ber, const CondLinkConfig& cfg);

} // namespace semlink
