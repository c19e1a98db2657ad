#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fftune {

// Exit-code buckets used by the CLI: input/parse errors map to exit 2,
// analysis errors to 3, configuration errors to 4.
enum class ErrorCategory { Input, Analysis, Config };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string message)
        : std::runtime_error(std::move(message)), category_(category) {}

    [[nodiscard]] ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct ParseError : Error {
    explicit ParseError(std::string msg) : Error(ErrorCategory::Input, std::move(msg)) {}
};

// Power-sample timestamps decreased somewhere in the file.
struct OrderError : Error {
    explicit OrderError(std::string msg) : Error(ErrorCategory::Input, std::move(msg)) {}
};

// A step pattern walked from f_max does not land exactly on f_min.
struct GridMismatch : Error {
    explicit GridMismatch(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

// Memory budget does not fit a single transform.
struct BatchTooSmall : Error {
    explicit BatchTooSmall(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

struct InvalidDuration : Error {
    explicit InvalidDuration(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

// A kernel interval has no overlapping power-sample window.
struct AttributionError : Error {
    explicit AttributionError(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct InsufficientData : Error {
    explicit InsufficientData(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct MissingClockData : Error {
    explicit MissingClockData(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct InvalidEnergy : Error {
    explicit InvalidEnergy(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct DegenerateData : Error {
    explicit DegenerateData(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct NoData : Error {
    explicit NoData(std::string msg) : Error(ErrorCategory::Analysis, std::move(msg)) {}
};

struct MissingReference : Error {
    explicit MissingReference(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

struct ConfigMismatch : Error {
    explicit ConfigMismatch(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

struct InvalidPipeline : Error {
    explicit InvalidPipeline(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

// A requested lock frequency is not on the device grid.
struct GridError : Error {
    explicit GridError(std::string msg) : Error(ErrorCategory::Config, std::move(msg)) {}
};

inline int exit_code(ErrorCategory category) {
    switch (category) {
    case ErrorCategory::Input: return 2;
    case ErrorCategory::Analysis: return 3;
    case ErrorCategory::Config: return 4;
    }
    return 1;
}

} // namespace fftune
