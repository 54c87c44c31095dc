#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// Invalid parameters or violated preconditions (bad config, infeasible sizes).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside an estimator or solver: rank deficiency,
/// ill-conditioning, degenerate spike configurations.
class EstimatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A whole sweep level produced no successful trials.
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectral
