#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycpath {

enum class ErrorCode {
  ParseError,
  DuplicateLabel,
  LabelNotPresent,
  LabelClash,
  NotConnected,
  NotATubing,
  InvalidMultiset,
  NotAPath,
  NotACycle,
  NotAClosure,
  OrderMismatch,
  OrderExceeded,
  HostNotCycle,
  VerificationFailed,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cycpath
