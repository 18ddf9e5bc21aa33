// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/error.hpp"

namespace u21 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NoSuchRoot: return "NoSuchRoot";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ChopFailed: return "ChopFailed";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotRankTwo: return "NotRankTwo";
    case ErrorCode::AmbiguousParameter: return "AmbiguousParameter";
    case ErrorCode::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::MismatchedParameters: return "MismatchedParameters";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace u21
