#pragma once

#include <stdexcept>
#include <string>

namespace iclaws {

// Error taxonomy shared by all modules. Each condition gets its own type so
// callers (and tests) can catch precisely.

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

struct BelowMinimum : std::runtime_error {
  explicit BelowMinimum(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidTime : std::runtime_error {
  explicit InvalidTime(const std::string& msg) : std::runtime_error(msg) {}
};

struct CflViolation : std::runtime_error {
  explicit CflViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidExponent : std::runtime_error {
  explicit InvalidExponent(const std::string& msg) : std::runtime_error(msg) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFit : std::runtime_error {
  explicit DegenerateFit(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConditionViolated : std::runtime_error {
  explicit ConditionViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace iclaws
