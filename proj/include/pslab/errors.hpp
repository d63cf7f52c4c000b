#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

struct EqualPoints : std::invalid_argument {
  explicit EqualPoints(const std::string& what) : std::invalid_argument(what) {}
};

struct NonPositiveWeight : std::invalid_argument {
  explicit NonPositiveWeight(const std::string& what) : std::invalid_argument(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct BracketFailure : std::runtime_error {
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

struct PerronFailure : std::runtime_error {
  explicit PerronFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DepthTooShallow : std::invalid_argument {
  explicit DepthTooShallow(const std::string& what) : std::invalid_argument(what) {}
};

struct SubcriticalS : std::invalid_argument {
  explicit SubcriticalS(const std::string& what) : std::invalid_argument(what) {}
};

struct NonConstantG : std::invalid_argument {
  explicit NonConstantG(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pslab
