#pragma once

#include <stdexcept>
#include <string>

namespace sorp {

enum class ErrorKind {
  DimensionTooSmall,
  InvalidBoundary,
  NonSolvable,
  NonConvergent,
  InvalidMode,
  FormulaDomain,
  SingularSystem,
  InvalidArgument,
  TooManyUnknowns,
  EigenFailure,
  NoRoot,
  Inadmissible,
  Io,
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

}  // namespace sorp
