#include "vkit/error.hpp"

namespace vkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::UnbalancedCrossing: return "UnbalancedCrossing";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::BadIncidence: return "BadIncidence";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::NonCanonicalWord: return "NonCanonicalWord";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::MixedValueKinds: return "MixedValueKinds";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::UnknownDouble: return "UnknownDouble";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::LookupMiss: return "LookupMiss";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NoConfigurationFound: return "NoConfigurationFound";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace vkit
