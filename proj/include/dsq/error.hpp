#pragma once

#include <stdexcept>
#include <string>

namespace dsq {

/// Malformed edge-list input. The message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A precondition of an operation does not hold (reducible input, bad family spec, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative solver failed to converge.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace dsq
