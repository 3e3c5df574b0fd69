#pragma once

#include <stdexcept>
#include <string>

namespace addlin {

// Every failure the core can signal. The C API and the CLI map these to
// status codes / exit codes, so the set is deliberately closed.
enum class Status {
  Ok = 0,
  InvalidArgument,
  NotPrimePower,
  ReduciblePolynomial,
  ZeroConstantTerm,
  FieldMismatch,
  DimensionMismatch,
  Singular,
  RankDeficientBlock,
  BudgetExceeded,
  ZeroGenerator,
  PositionOutOfRange,
  InstanceTooLarge,
  ModulusMismatch,
  AllCoordinatesZero,
  ParseError,
  IoError,
  Internal,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& msg)
      : std::runtime_error(msg), status_(s) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) {
  throw Error(s, msg);
}

}  // namespace addlin
