#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace glstep {

enum class ErrorKind {
  Input,       // malformed input: NaN, empty grids, inconsistent sizes
  Domain,      // parameters outside a documented precondition
  Truncation,  // far-field cutoff too small for the computed state
  Solver,      // iteration cap or line-search failure
  Conditioning // quantity too small to divide by safely
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the best iterate so callers can inspect or resume from it.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> best)
      : Error(ErrorKind::Solver, what), best_(std::move(best)) {}

  const std::vector<double>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<double> best_;
};

// Short scientific notation for messages.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace glstep
