#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace anisolab {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SolverError : std::runtime_error {
  std::vector<double> residual_history;
  explicit SolverError(const std::string& what,
                       std::vector<double> history = {})
      : std::runtime_error(what), residual_history(std::move(history)) {}
};

// Numerical dual evaluation failed to certify a stationary point; carries
// the best lower bound found so far.
struct DualEvalError : SolverError {
  double best_lower_bound;
  DualEvalError(const std::string& what, double lower_bound)
      : SolverError(what), best_lower_bound(lower_bound) {}
};

}  // namespace anisolab
