#ifndef IMPACTGRAPH_ERROR_HPP
#define IMPACTGRAPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace impactgraph {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid cognitive map input (shape, labels, diagonal, numbers).
class MapError : public Error {
 public:
  using Error::Error;
};

/// Bad argument from the caller: invalid node, invalid path, bad parameter.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Failure of a computation on valid input. The CLI maps these to exit code 2.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class PathLimitExceeded : public ComputationError {
 public:
  explicit PathLimitExceeded(std::size_t limit)
      : ComputationError("simple path count exceeds limit of " +
                         std::to_string(limit) +
                         " (raise --max-paths to enumerate further)"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class ArithmeticOverflow : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class DegenerateNormalization : public ComputationError {
 public:
  explicit DegenerateNormalization(double sum)
      : ComputationError("normalization sum is degenerate (S = " +
                         std::to_string(sum) + ")"),
        sum_(sum) {}

  double sum() const noexcept { return sum_; }

 private:
  double sum_;
};

class NonConvergence : public ComputationError {
 public:
  NonConvergence(std::size_t steps, double last_change)
      : ComputationError("propagation did not converge within " +
                         std::to_string(steps) + " steps (last change " +
                         std::to_string(last_change) + ")"),
        steps_(steps) {}

  std::size_t steps() const noexcept { return steps_; }

 private:
  std::size_t steps_;
};

}  // namespace impactgraph

#endif  // IMPACTGRAPH_ERROR_HPP
