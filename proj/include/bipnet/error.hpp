#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bipnet {

// Error categories reported by the library. The CLI maps these onto exit
// codes and the "kind" field of its error JSON.
enum class ErrorKind {
  invalid_input,
  empty_graph,
  scale_limit,
  disconnected,
  non_convergence,
  ambiguous,
  domain,
  io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Thrown when an iterative solver exhausts its iteration budget.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& message, double best_residual)
      : Error(ErrorKind::non_convergence, message), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

}  // namespace bipnet
