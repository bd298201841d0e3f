#pragma once

#include <stdexcept>
#include <string>

namespace thermnet {

/// Bad or inconsistent user input (configs, file paths, malformed tables).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical procedure failed to converge or produced an unusable result.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented model invariant was violated by the data at hand.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace thermnet
