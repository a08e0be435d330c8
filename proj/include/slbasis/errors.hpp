#ifndef SLBASIS_ERRORS_HPP
#define SLBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slb {

// Invalid user input (bad config, malformed coefficient data).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during a computation (missed roots, degeneracies, ...).
class ComputationError : public std::runtime_error {
public:
  explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

class PoleHitError : public ComputationError {
public:
  explicit PoleHitError(const std::string& msg) : ComputationError(msg) {}
};

class MissedRootError : public ComputationError {
public:
  explicit MissedRootError(const std::string& msg) : ComputationError(msg) {}
};

class DegenerateRootError : public ComputationError {
public:
  explicit DegenerateRootError(const std::string& msg) : ComputationError(msg) {}
};

class SingularMatrixError : public ComputationError {
public:
  explicit SingularMatrixError(const std::string& msg) : ComputationError(msg) {}
};

class HypothesisError : public ComputationError {
public:
  explicit HypothesisError(const std::string& msg) : ComputationError(msg) {}
};

}  // namespace slb

#endif
