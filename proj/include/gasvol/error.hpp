#pragma once

#include <stdexcept>
#include <string>

namespace gasvol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user configuration (unsupported kernel, bad level, bad flags).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input data violates a precondition (too short, non-finite, empty CSV).
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV input; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(const std::string& what, std::size_t line)
        : DataError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Numerical failure of a local estimate at a specific evaluation point.
class EstimationError : public Error {
public:
    EstimationError(const std::string& what, double x)
        : Error(what + " at x=" + std::to_string(x)), x_(x) {}
    double point() const noexcept { return x_; }

private:
    double x_;
};

/// The pilot fit is unusable for functional estimation.
class DegeneratePilotError : public Error {
public:
    using Error::Error;
};

/// Curvature functional vanished; the caller must widen I_x or cap h.
class FlatCurvatureError : public Error {
public:
    using Error::Error;
};

}  // namespace gasvol
