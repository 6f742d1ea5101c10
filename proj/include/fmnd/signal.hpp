// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmnd {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

/// SNR sentinel meaning "inject no noise at all".
constexpr double kNoNoiseDb = std::numeric_limits<double>::infinity();

inline void ensure_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + ": non-finite sample");
}

/// Mono audio, dimensionless amplitude with nominal range [-1, 1].
struct AudioSignal {
    std::vector<double> samples;
    std::uint32_t sample_rate_hz = 48000;

    AudioSignal() = default;
    AudioSignal(std::vector<double> s, std::uint32_t rate)
        : samples(std::move(s)), sample_rate_hz(rate) {
        if (rate == 0) throw std::invalid_argument("AudioSignal: sample rate must be positive");
    }

    std::size_t size() const { return samples.size(); }
    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

/// Complex baseband as separate in-phase / quadrature sequences.
struct BasebandSignal {
    std::vector<double> i;
    std::vector<double> q;
    std::uint32_t sample_rate_hz = 240000;

    BasebandSignal() = default;
    BasebandSignal(std::vector<double> in_phase, std::vector<double> quadrature,
                   std::uint32_t rate)
        : i(std::move(in_phase)), q(std::move(quadrature)), sample_rate_hz(rate) {
        if (rate == 0) throw std::invalid_argument("BasebandSignal: sample rate must be positive");
        if (i.size() != q.size())
            throw std::invalid_argument("BasebandSignal: I and Q length mismatch");
    }

    std::size_t size() const { return i.size(); }
};

/// Modulation constants. carrier_freq_hz is informational only; the whole
/// pipeline operates on the complex baseband.
struct FmParams {
    double carrier_amplitude = 1.0;
    double freq_deviation_hz = 75000.0;
    std::uint32_t baseband_rate_hz = 240000;
    std::uint32_t audio_rate_hz = 48000;
    double carrier_freq_hz = 0.0;

    /// baseband samples per audio sample
    std::uint32_t upsample_factor() const {
        validate();
        return baseband_rate_hz / audio_rate_hz;
    }

    void validate() const {
        if (carrier_amplitude <= 0.0)
            throw std::invalid_argument("FmParams: carrier amplitude must be positive");
        if (freq_deviation_hz <= 0.0)
            throw std::invalid_argument("FmParams: frequency deviation must be positive");
        if (audio_rate_hz == 0 || baseband_rate_hz == 0)
            throw std::invalid_argument("FmParams: rates must be positive");
        if (baseband_rate_hz % audio_rate_hz != 0)
            throw std::invalid_argument(
                "FmParams: baseband rate must be an integer multiple of the audio rate");
        if (freq_deviation_hz >= baseband_rate_hz / 2.0)
            throw std::invalid_argument(
                "FmParams: frequency deviation must stay below half the baseband rate");
    }
};

inline double mean_power(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc / static_cast<double>(v.size());
}

inline double mean_power(const BasebandSignal& bb) {
    if (bb.size() == 0) return 0.0;
    double acc = 0.0;
    for (std::size_t n = 0; n < bb.size(); ++n) acc += bb.i[n] * bb.i[n] + bb.q[n] * bb.q[n];
    return acc / static_cast<double>(bb.size());
}

} // namespace fmnd
