#pragma once

#include <stdexcept>
#include <string>

namespace ysim {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required column is missing or the header is unusable.
class schema_error : public error {
public:
    using error::error;
};

// A malformed row or cell; carries the 1-based line number in the source.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input held no data at all.
class empty_input_error : public error {
public:
    using error::error;
};

// An argument violates a documented domain (alpha out of (0,1], x outside
// [0,1], negative f, unknown mode, ...).
class input_error : public error {
public:
    using error::error;
};

// A value falls outside the configured bin range, or the range is degenerate.
class range_error : public error {
public:
    using error::error;
};

// Nothing survives truncation (h = 0).
class truncation_error : public error {
public:
    using error::error;
};

// Regression cannot be carried out: too few points or zero variance.
class fit_error : public error {
public:
    using error::error;
};

// Filesystem trouble while emitting or reading artifacts.
class io_error : public error {
public:
    using error::error;
};

} // namespace ysim
