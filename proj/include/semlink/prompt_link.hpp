// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

namespace semlink {

struct SystemConfig;

/// Reliable stream: convolutionally coded QPSK packets with CRC-triggered
/// retransmission. The packet error model is
///   PER(snr) = 1 - L^(-k/snr) * exp(-b/snr) = 1 - exp(-(k ln L + b)/snr).
struct PromptLinkConfig {
    double packet_bits = 629.0; ///< packet length L, bits
    double code_rate = 0.5;     ///< coding rate r in (0, 1]
    int mod_order = 4;          ///< modulation order (QPSK = 4), power of 2
    double per_k = 0.374;       ///< coding-dependent PER constant k
    double per_b = -0.31;       ///< coding-dependent PER constant b

    /// k*ln(L) + b; must be positive for the PER model to stay in [0, 1).
    double per_exponent() const;

    void validate() const;
};

/// Expected-delay decomposition of the retransmission stream:
/// total = n_packets * exp_retx * packet_time.
struct PromptDelayBreakdown {
    double n_packets = 0.0;   ///< |v0| / (r L), kept continuous
    double exp_retx = 0.0;    ///< 1 / (1 - PER), >= 1
    double packet_time_s = 0.0; ///< L / (log2(M0) B0)
    double total_s = 0.0;     ///< product of the three factors
    double per = 0.0;         ///< packet error rate at the operating SNR
    bool per_clamped = false; ///< PER hit the 1 - 1e-12 clamp ("effectively infeasible")
};

/// PER clamp keeping 1/(1-PER) finite; configurations that reach it are
/// flagged rather than rejected.
inline constexpr double kPerClamp = 1.0 - 1e-12;

/// Packet error rate at linear SNR `snr0` (> 0), clamped to [0, kPerClamp].
double packet_error_rate(double snr0, const PromptLinkConfig& cfg);

/// Expected total delay of a `prompt_bits` payload at linear SNR `snr0` over
/// bandwidth `bw_hz`, with the packet/retransmission/airtime breakdown.
PromptDelayBreakdown prompt_delay(double prompt_bits, const PromptLinkConfig& cfg, double snr0,
                                  double bw_hz);

/// Delay floor at infinite SNR (no retransmissions): |v0| / (r log2(M0) B0).
double zero_per_delay_bound(double prompt_bits, const PromptLinkConfig& cfg, double bw_hz);

/// Inverts prompt_delay in the transmit power: the unique p0 with
/// prompt_delay(..., snr(p0)) == target_t0_s to 1e-9 relative tolerance.
/// Throws infeasible_error when the target is at or below the zero-PER bound.
double power_for_prompt_delay(double target_t0_s, const SystemConfig& sys, double gain_sq);

} // namespace semlink
