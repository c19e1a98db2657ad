#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fftune/errors.hpp"
#include "fftune/types.hpp"

namespace fftune {

// Absolute tolerance for grid membership and endpoint checks. Driver grids
// are quantized to whole or tenth MHz; accumulation drift stays far below.
inline constexpr MegaHertz kGridToleranceMhz = 1e-6;

// Allowed-frequency description of one GPU model. The grid is either walked
// from f_max down to f_min with an alternating step pattern, or listed
// explicitly (the explicit list takes precedence when present).
struct DeviceSpec {
    std::string name;
    MegaHertz f_max = 0.0;
    MegaHertz f_min = 0.0;
    std::vector<MegaHertz> step_pattern;         // decrements, cycled in order
    std::vector<MegaHertz> explicit_frequencies; // descending, optional
    MegaHertz boost_clock = 0.0;
    std::optional<MegaHertz> base_clock;
    std::uint64_t mem_bytes = 0;
    Watts tdp = 0.0; // informational
    // Measurement error on this device is large enough that Bluestein
    // lengths are excluded from mean-optimal averaging.
    bool high_error = false;
    // Catalog constants: published mean optimal core clocks per precision.
    std::map<Precision, MegaHertz> mean_optimal;

    [[nodiscard]] bool valid() const {
        if (!(f_min <= f_max)) return false;
        for (MegaHertz s : step_pattern)
            if (!(s > 0.0)) return false;
        return !step_pattern.empty() || !explicit_frequencies.empty();
    }
};

// Ordered list of allowed core clocks, descending from f_max to f_min.
// Throws GridMismatch when the step pattern fails to land exactly on f_min;
// the documented fallback is an explicit frequency list in the catalog.
inline std::vector<MegaHertz> allowed_frequencies(const DeviceSpec& spec) {
    if (!spec.explicit_frequencies.empty()) {
        std::vector<MegaHertz> grid = spec.explicit_frequencies;
        std::sort(grid.begin(), grid.end(), std::greater<>());
        if (std::abs(grid.front() - spec.f_max) > kGridToleranceMhz ||
            std::abs(grid.back() - spec.f_min) > kGridToleranceMhz) {
            throw GridMismatch(spec.name + ": explicit frequency list endpoints " +
                               std::to_string(grid.front()) + ".." + std::to_string(grid.back()) +
                               " do not match f_max/f_min");
        }
        return grid;
    }
    if (spec.step_pattern.empty()) throw GridMismatch(spec.name + ": no step pattern and no explicit list");

    std::vector<MegaHertz> grid{spec.f_max};
    MegaHertz f = spec.f_max;
    std::size_t i = 0;
    while (f > spec.f_min + kGridToleranceMhz) {
        f -= spec.step_pattern[i % spec.step_pattern.size()];
        ++i;
        if (f < spec.f_min - kGridToleranceMhz) {
            throw GridMismatch(spec.name + ": step pattern walks past f_min (" +
                               std::to_string(f) + " < " + std::to_string(spec.f_min) +
                               " MHz); supply an explicit frequency list");
        }
        grid.push_back(f);
    }
    return grid;
}

inline bool on_grid(std::span<const MegaHertz> grid, MegaHertz f) {
    return std::any_of(grid.begin(), grid.end(),
                       [f](MegaHertz g) { return std::abs(g - f) <= kGridToleranceMhz; });
}

// Nearest grid member; equidistant candidates resolve to the higher clock.
inline MegaHertz snap_to_grid(std::span<const MegaHertz> grid, MegaHertz f) {
    if (grid.empty()) throw NoData("snap_to_grid: empty grid");
    MegaHertz best = grid.front();
    double best_dist = std::abs(grid.front() - f);
    for (MegaHertz g : grid.subspan(1)) {
        const double d = std::abs(g - f);
        if (d < best_dist - kGridToleranceMhz ||
            (std::abs(d - best_dist) <= kGridToleranceMhz && g > best)) {
            best = g;
            best_dist = d;
        }
    }
    return best;
}

// Default tolerance when checking achieved against requested clocks: one
// grid step, since the driver reports quantized frequencies.
inline MegaHertz default_frequency_tolerance(const DeviceSpec& spec) {
    if (!spec.step_pattern.empty()) {
        return *std::max_element(spec.step_pattern.begin(), spec.step_pattern.end());
    }
    std::vector<MegaHertz> grid = spec.explicit_frequencies;
    std::sort(grid.begin(), grid.end());
    MegaHertz step = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) step = std::max(step, grid[i] - grid[i - 1]);
    return step > 0.0 ? step : 1.0;
}

// Highest grid frequency not exceeding the given clock. The boost and base
// clocks quoted on spec sheets are not always grid members themselves.
inline MegaHertz reference_frequency(std::span<const MegaHertz> grid, MegaHertz clock) {
    std::optional<MegaHertz> best;
    for (MegaHertz g : grid) {
        if (g <= clock + kGridToleranceMhz && (!best || g > *best)) best = g;
    }
    if (!best) {
        throw MissingReference("no grid frequency at or below " + std::to_string(clock) + " MHz");
    }
    return *best;
}

} // namespace fftune
