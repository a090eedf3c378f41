#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fpk/types.hpp"

namespace fpk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A coefficient closure produced a non-finite or otherwise invalid value.
/// Carries the evaluation point.
struct EvalError : Error {
  EvalError(const std::string& what, const Vec& point) : Error(what), where(point) {}
  Vec where;
};

/// Linear solver breakdown or non-convergence. Carries the relative residual
/// recorded at each restart plus the final value.
struct SolveError : Error {
  SolveError(const std::string& what, std::vector<double> history)
      : Error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

}  // namespace fpk
