#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fftune {

using Milliseconds = double;
using Seconds = double;
using Watts = double;
using Joules = double;
using MegaHertz = double;
using Flops = double; // floating-point operations per second

// One timestamped reading from a power sampling tool. Timestamps are
// milliseconds on the capture tool's own time base; the log keeps them
// verbatim and records the first timestamp as the epoch.
struct PowerSample {
    Milliseconds t = 0.0;
    Watts power = 0.0;
    std::optional<MegaHertz> core_clock;
    std::optional<MegaHertz> mem_clock;
};

// One kernel execution window from a trace log.
struct KernelInterval {
    Milliseconds start = 0.0;
    Milliseconds end = 0.0;
    std::string name;

    [[nodiscard]] Milliseconds duration_ms() const { return end - start; }
};

enum class Precision { FP16, FP32, FP64 };

// Byte size of one complex element (two reals).
constexpr std::uint64_t complex_bytes(Precision p) {
    switch (p) {
    case Precision::FP16: return 4;
    case Precision::FP32: return 8;
    case Precision::FP64: return 16;
    }
    return 0;
}

constexpr const char* precision_name(Precision p) {
    switch (p) {
    case Precision::FP16: return "fp16";
    case Precision::FP32: return "fp32";
    case Precision::FP64: return "fp64";
    }
    return "?";
}

inline std::optional<Precision> parse_precision(std::string_view s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    if (lower == "fp16" || lower == "half") return Precision::FP16;
    if (lower == "fp32" || lower == "float") return Precision::FP32;
    if (lower == "fp64" || lower == "double") return Precision::FP64;
    return std::nullopt;
}

constexpr bool is_power_of_two(std::uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace fftune
