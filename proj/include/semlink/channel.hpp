// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include <cstdint>
#include <vector>

namespace semlink {

/// Physical-layer parameterization of one flat Rayleigh block-fading link.
/// The reference distance for the path-loss anchor is fixed at 1 m.
struct ChannelParams {
    double pathloss_ref = 1e-3;   ///< linear power ratio at 1 m
    double pathloss_exp = 3.4;    ///< path-loss exponent
    double distance_m = 100.0;    ///< link distance, metres (>= 1)
    double noise_density = 1e-20; ///< noise PSD, W/Hz

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Deterministic (mean) squared channel gain: pathloss_ref * d^-exp.
/// The Rayleigh scattering factor has unit mean, so this is E|h|^2.
double mean_gain(const ChannelParams& ch);

/// Draws `count` squared channel gains |h|^2 = mean_gain * e, with e a
/// unit-mean exponential (squared magnitude of a unit-variance CSCG draw).
/// Bit-identical output for identical (count, seed).
std::vector<double> sample_fading_gains(const ChannelParams& ch, std::size_t count,
                                        std::uint64_t seed);

/// Received SNR of one stream: p * |h|^2 / (B * N0). Zero power gives zero SNR.
double stream_snr(double power_w, double gain_sq, double bandwidth_hz, double noise_density);

} // namespace semlink
