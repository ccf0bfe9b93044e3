#include "cycpath/errors.hpp"

namespace cycpath {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::LabelNotPresent: return "LabelNotPresent";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotATubing: return "NotATubing";
    case ErrorCode::InvalidMultiset: return "InvalidMultiset";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotAClosure: return "NotAClosure";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::HostNotCycle: return "HostNotCycle";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cycpath
