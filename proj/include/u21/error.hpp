// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace u21 {

// Numeric values are shared with the C API status codes in u21.h.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  NonPrimeCharacteristic = 2,
  FieldTooLarge = 3,
  ZeroArgument = 4,
  NoSuchRoot = 5,
  BadParameters = 6,
  NotInGroup = 7,
  NotIsotropic = 8,
  EnumerationTooLarge = 9,
  BadPrime = 10,
  FieldMismatch = 11,
  FormatError = 12,
  IoError = 13,
  ChopFailed = 14,
  NotIrreducible = 15,
  NotRankTwo = 16,
  AmbiguousParameter = 17,
  SubgroupMismatch = 18,
  UnsupportedCase = 19,
  MismatchedParameters = 20,
  Internal = 21,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace u21
