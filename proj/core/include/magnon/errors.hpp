#ifndef MAGNON_ERRORS_HPP
#define MAGNON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magnon {

// Bad geometry/layout/config supplied by the caller.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data fails a precondition (non-finite values, mismatched sizes).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine failed to reach its requested tolerance.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace magnon

#endif
