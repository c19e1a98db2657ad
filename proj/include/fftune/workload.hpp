#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fftune/errors.hpp"
#include "fftune/types.hpp"

namespace fftune {

// One measured workload configuration: complex FFTs of length n are packed
// into a fixed memory budget and the whole batch is executed `repeats` times.
struct FftConfig {
    std::uint64_t n = 0;                   // FFT length in complex points
    Precision precision = Precision::FP32;
    std::uint64_t memory_budget_bytes = 0; // input data budget for one batch
    std::uint64_t repeats = 1;             // number of repeated batch runs

    [[nodiscard]] bool valid() const {
        return n >= 2 && repeats >= 1 && memory_budget_bytes >= n * complex_bytes(precision);
    }
};

// Number of transforms that fill the memory budget.
inline std::uint64_t n_fft(const FftConfig& config) {
    const std::uint64_t per_fft = config.n * complex_bytes(config.precision);
    if (config.memory_budget_bytes < per_fft) {
        throw BatchTooSmall("memory budget " + std::to_string(config.memory_budget_bytes) +
                            " B holds no transform of " + std::to_string(per_fft) + " B");
    }
    return config.memory_budget_bytes / per_fft;
}

// Total useful floating-point operations of a run: 5 N log2(N) per
// transform, times transforms per batch, times repeated batches.
inline double fft_flop_count(const FftConfig& config) {
    const double n = static_cast<double>(config.n);
    return 5.0 * n * std::log2(n) * static_cast<double>(config.repeats) *
           static_cast<double>(n_fft(config));
}

// Achieved computational performance in FLOPS for a run lasting t seconds.
inline Flops flops(const FftConfig& config, Seconds t) {
    if (!(t > 0.0)) {
        throw InvalidDuration("run duration must be positive, got " + std::to_string(t) + " s");
    }
    return fft_flop_count(config) / t;
}

enum class FftAlgorithm { CooleyTukey, Bluestein };

// Cooley-Tukey handles lengths whose prime factors do not exceed 127;
// anything else falls back to Bluestein's algorithm.
inline FftAlgorithm classify_fft_length(std::uint64_t n) {
    static constexpr std::uint64_t primes[] = {
        2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
        59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127};
    for (std::uint64_t p : primes) {
        while (n % p == 0) n /= p;
    }
    return n == 1 ? FftAlgorithm::CooleyTukey : FftAlgorithm::Bluestein;
}

// Execution time of one transform within a batch.
inline Seconds single_fft_time(Seconds t_fix, std::uint64_t transforms_per_batch) {
    return t_fix / static_cast<double>(transforms_per_batch);
}

} // namespace fftune
