#pragma once

#include <stdexcept>
#include <string>

namespace vascrew {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or out-of-domain input (bad geometry, angle outside
/// [0, 90), cutoff at/above Nyquist, ...). Maps to CLI exit code 2.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed input file. Messages carry "path:line:" where applicable.
/// Maps to CLI exit code 2.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Data-quality problem in an otherwise well-formed trial (no steady state,
/// zero angular velocity, ...). Maps to CLI exit code 3.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

}  // namespace vascrew
