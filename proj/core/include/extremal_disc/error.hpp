#pragma once

#include <stdexcept>
#include <string>

namespace xdisc {

enum class ErrorCode {
  DomainError,      // argument outside the open domain of the operation
  InvalidSpec,      // parameter record violates its invariants
  NoRootInDisc,
  TwoRootsInDisc,
  SingularMatrix,
  NotPositiveSemidefinite,
  VanishingDenominator,
  RootRecovery,
  EndpointMismatch,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace xdisc
