#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

// Library errors carry a short machine-readable code; the CLI prints
// "<code>: <message>" and maps the code to an exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A class whose coordinates are not integral over the active generator
// system: not an integral cobordism class (or the system is inadequate).
class NonIntegralError : public Error {
public:
    explicit NonIntegralError(const std::string& m) : Error("NonIntegral", m) {}
};

// Strict mode has no generator in some required dimension.
class StrictModeGapError : public Error {
public:
    StrictModeGapError(int dim, const std::string& m)
        : Error("StrictModeGap", m), dim_(dim) {}

    int dimension() const noexcept { return dim_; }

private:
    int dim_;
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& m)
        : Error("DimensionMismatch", m) {}
};

// Invalid domain object: bad fan, bad variety parameters, bad argument.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& m) : Error("Validation", m) {}
};

// Consistency failure that signals a bug, not a user error.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& m) : Error("Internal", m) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& m, int line, int column)
        : Error("Parse", m), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace cobord
