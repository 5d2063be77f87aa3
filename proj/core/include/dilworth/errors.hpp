#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dilworth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge, wrong vertex count, unparsable file.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A configured size cap (materialization, enumeration, backtracking) was hit.
class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
        : Error(what + " (required " + std::to_string(required) + ", limit " +
                std::to_string(limit) + ")"),
          required_(required),
          limit_(limit) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

protected:
    explicit LimitExceeded(const std::string& message) : Error(message), required_(0), limit_(0) {}

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

/// A wall-clock budget ran out in a routine that has no partial answer.
class BudgetExhausted : public LimitExceeded {
public:
    explicit BudgetExhausted(const std::string& what) : LimitExceeded(what + " (time budget exhausted)") {}
};

/// A certificate is structurally unusable (indices out of range, wrong
/// length). Distinct from a well-formed certificate that fails its predicate.
class MalformedCertificate : public Error {
public:
    using Error::Error;
};

/// A precondition requiring a verified certificate was not met.
class UnverifiedCertificate : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace dilworth
