#pragma once

#include <stdexcept>
#include <string>

namespace eegvoc {

// Base class for all library errors. Subclasses exist so callers can
// distinguish failure kinds without parsing messages.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class CorruptBundleError : public Error {
public:
    using Error::Error;
};

class InvalidRateError : public Error {
public:
    using Error::Error;
};

class TooFewRecordingsError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class InvalidCutoffError : public Error {
public:
    using Error::Error;
};

class InvalidComponentError : public Error {
public:
    using Error::Error;
};

class WindowTooShortError : public Error {
public:
    using Error::Error;
};

class RecordingTooShortError : public Error {
public:
    using Error::Error;
};

class RankDeficientError : public Error {
public:
    RankDeficientError(const std::string& msg, int available)
        : Error(msg), available_components(available) {}
    int available_components;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class EmptyLossError : public Error {
public:
    using Error::Error;
};

class NoDataError : public Error {
public:
    using Error::Error;
};

class AlignmentError : public Error {
public:
    using Error::Error;
};

class DegenerateRangeError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

class InvalidConfigError : public Error {
public:
    using Error::Error;
};

// A pipeline stage was invoked before the stage producing its inputs.
// The message names the missing artifact.
class StageOrderError : public Error {
public:
    using Error::Error;
};

}  // namespace eegvoc
