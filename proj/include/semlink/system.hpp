// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include "semlink/channel.hpp"
#include "semlink/cond_link.hpp"
#include "semlink/prompt_link.hpp"

namespace semlink {

/// Full two-stream link parameterization: shared channel and power budget,
/// per-stream bandwidths and payloads, and the per-stream link models.
struct SystemConfig {
    ChannelParams channel;
    double total_power_w = 1e-2; ///< transmit power budget P_T
    double bw_prompt_hz = 1e6;   ///< B0
    double bw_cond_hz = 1e6;     ///< B1
    double prompt_bits = 629.0;  ///< |v0|
    double cond_bits = 7864.0;   ///< |v1|
    PromptLinkConfig prompt;
    CondLinkConfig cond;
    double compute_latency_s = 0.0; ///< optional additive constant, reporting only

    void validate() const;
};

/// Channel-quality indicator: total power at the mean gain over the total
/// bandwidth, P_T * E|h|^2 / ((B0 + B1) * N0).
double average_snr(const SystemConfig& sys);

/// Inverts average_snr: the squared gain that produces `avg_snr_linear`.
/// Sweeps are parameterized on the average SNR rather than on distance.
double gain_for_average_snr(const SystemConfig& sys, double avg_snr_linear);

} // namespace semlink
