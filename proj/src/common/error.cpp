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

#include <ledgerseal/common/error.hpp>

namespace ledgerseal {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidInput: return "invalid_input";
        case ErrorCode::kUnauthorized: return "unauthorized";
        case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
        case ErrorCode::kCorruptStream: return "corrupt_stream";
        case ErrorCode::kAuthenticationFailed: return "authentication_failed";
        case ErrorCode::kMalformedToken: return "malformed_token";
        case ErrorCode::kEntropyUnavailable: return "entropy_unavailable";
        case ErrorCode::kSenderKeyMismatch: return "sender_key_mismatch";
        case ErrorCode::kInvalidSignature: return "invalid_signature";
        case ErrorCode::kNonceMismatch: return "nonce_mismatch";
        case ErrorCode::kBackendUnavailable: return "chain_unavailable";
        case ErrorCode::kDuplicateTransaction: return "duplicate_transaction";
        case ErrorCode::kNotFound: return "not_found";
        case ErrorCode::kDuplicateUid: return "duplicate_uid";
        case ErrorCode::kStorageFailure: return "storage_failure";
        case ErrorCode::kConfigError: return "config_error";
        case ErrorCode::kServiceDisabled: return "service_disabled";
        case ErrorCode::kTxFailed: return "tx_failed";
    }
    return "unknown";
}

}  // namespace ledgerseal
