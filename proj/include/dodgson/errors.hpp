#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace dodgson {

/// Base for every error raised by the library. Callers that only need to
/// report a failure can catch this; callers that branch on the failure
/// catch the concrete type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars of different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Division whose divisor tests zero. When raised from a condensation step
/// the position of the offending output entry is attached.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what,
                            std::optional<std::pair<std::size_t, std::size_t>> position = {})
        : Error(what), position_(position) {}

    const std::optional<std::pair<std::size_t, std::size_t>>& position() const noexcept {
        return position_;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> position_;
};

/// Integer or polynomial division that leaves a remainder.
class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what,
                             std::optional<std::pair<std::size_t, std::size_t>> position = {})
        : Error(what), position_(position) {}

    const std::optional<std::pair<std::size_t, std::size_t>>& position() const noexcept {
        return position_;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> position_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A matrix is too small for the requested operation (e.g. the interior of a 2x2).
class TooSmall : public Error {
public:
    using Error::Error;
};

/// Interior-zero mitigation ran out of transforms to try.
class UnremovableZero : public Error {
public:
    using Error::Error;
};

/// Condensation gave up; the caller must use a reference method instead.
class FallbackRequired : public Error {
public:
    FallbackRequired(const std::string& reason, std::size_t restarts)
        : Error("condensation requires fallback: " + reason), reason_(reason), restarts_(restarts) {}

    const std::string& reason() const noexcept { return reason_; }
    std::size_t restarts() const noexcept { return restarts_; }

private:
    std::string reason_;
    std::size_t restarts_;
};

/// Iterative root finding hit its iteration cap.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line numbers are 1-based; 0 means "not line specific".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string token = {})
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

}  // namespace dodgson
