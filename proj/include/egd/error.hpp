#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egd {

enum class ErrorKind {
  Parse,
  InvalidRank,
  ContextMismatch,
  BadLetter,
  LengthOutOfRange,
  NonReducedInput,
  NotClassical,
  NotTypeD,
  DegreeOutOfRange,
  EmptyMarkedSet,
  Infeasible,
  ClosedFormUnavailable,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace egd
