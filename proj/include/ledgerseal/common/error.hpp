/*
   Copyright 2026 The LedgerSeal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEDGERSEAL_COMMON_ERROR_HPP_
#define LEDGERSEAL_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ledgerseal {

enum class ErrorCode {
    kInvalidInput,
    kUnauthorized,
    kIndexOutOfRange,
    kCorruptStream,
    kAuthenticationFailed,
    kMalformedToken,
    kEntropyUnavailable,
    kSenderKeyMismatch,
    kInvalidSignature,
    kNonceMismatch,
    kBackendUnavailable,
    kDuplicateTransaction,
    kNotFound,
    kDuplicateUid,
    kStorageFailure,
    kConfigError,
    kServiceDisabled,
    kTxFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

//! Every failure raised by the library carries one of the codes above so that
//! callers (HTTP handlers, CLI) can map it without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_{code} {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace ledgerseal

#endif  // LEDGERSEAL_COMMON_ERROR_HPP_
