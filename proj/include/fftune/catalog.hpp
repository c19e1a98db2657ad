#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fftune/device.hpp"
#include "fftune/errors.hpp"
#include "fftune/io_util.hpp"
#include "fftune/types.hpp"

namespace fftune {

// Device catalog: a versioned JSON document listing per-device frequency
// grids and published constants. Schema is documented in the repo README.
struct Catalog {
    int schema_version = 1;
    std::vector<DeviceSpec> devices;

    [[nodiscard]] const DeviceSpec& find(const std::string& name) const {
        for (const DeviceSpec& d : devices) {
            if (d.name == name) return d;
        }
        throw ConfigMismatch("device not in catalog: " + name);
    }

    [[nodiscard]] bool contains(const std::string& name) const {
        for (const DeviceSpec& d : devices) {
            if (d.name == name) return true;
        }
        return false;
    }
};

inline Catalog parse_catalog(const std::string& text, const std::string& source = "catalog") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
    try {
        Catalog catalog;
        catalog.schema_version = doc.at("schema_version").get<int>();
        for (const auto& entry : doc.at("devices")) {
            DeviceSpec spec;
            spec.name = entry.at("name").get<std::string>();
            spec.f_max = entry.at("f_max_mhz").get<double>();
            spec.f_min = entry.at("f_min_mhz").get<double>();
            if (entry.contains("step_pattern_mhz")) {
                spec.step_pattern = entry["step_pattern_mhz"].get<std::vector<double>>();
            }
            if (entry.contains("frequencies_mhz")) {
                spec.explicit_frequencies = entry["frequencies_mhz"].get<std::vector<double>>();
            }
            spec.boost_clock = entry.at("boost_clock_mhz").get<double>();
            if (entry.contains("base_clock_mhz") && !entry["base_clock_mhz"].is_null()) {
                spec.base_clock = entry["base_clock_mhz"].get<double>();
            }
            spec.mem_bytes = entry.at("mem_bytes").get<std::uint64_t>();
            spec.tdp = entry.value("tdp_w", 0.0);
            spec.high_error = entry.value("high_error", false);
            if (entry.contains("mean_optimal_mhz")) {
                for (const auto& [key, value] : entry["mean_optimal_mhz"].items()) {
                    auto precision = parse_precision(key);
                    if (!precision) throw ParseError(source + ": unknown precision key '" + key + "'");
                    spec.mean_optimal[*precision] = value.get<double>();
                }
            }
            if (!spec.valid()) {
                throw ParseError(source + ": invalid device entry '" + spec.name + "'");
            }
            catalog.devices.push_back(std::move(spec));
        }
        return catalog;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
}

inline Catalog load_catalog(const std::filesystem::path& path) {
    return parse_catalog(read_file(path), path.string());
}

// Catalog resolution order: explicit --catalog flag, FFTUNE_CATALOG
// environment variable, then ./data/catalog.json.
inline std::filesystem::path default_catalog_path() {
    if (const char* env = std::getenv("FFTUNE_CATALOG")) return env;
    return "data/catalog.json";
}

} // namespace fftune
