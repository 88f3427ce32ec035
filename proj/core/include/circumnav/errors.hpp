#pragma once

#include <stdexcept>
#include <string>

namespace circumnav {

struct ZeroRateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RhoOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveGainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalBlowupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateMeasurementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowOutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace circumnav
