#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace evc {

// Domain-level failure (bad mathematical input, violated precondition,
// exceeded enumeration budget).  Carries a stable machine-readable code
// such as "points/duplicate" or "distance/budget".
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed textual/JSON input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace evc
