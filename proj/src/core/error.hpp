#pragma once

#include <stdexcept>
#include <string>

namespace wsar {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition or invalid argument combination.
class ContractError : public Error {
public:
    using Error::Error;
};

// Malformed configuration input; carries the offending line when known.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// File or stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace wsar
