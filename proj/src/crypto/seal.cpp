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

#include <ledgerseal/crypto/seal.hpp>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/gzip.hpp>

namespace ledgerseal::crypto {

namespace {

void check_size(ByteView message) {
    if (message.size() > kMaxPayloadSize) throw Error{ErrorCode::kInvalidInput, "message exceeds 1 MiB"};
}

}  // namespace

std::string seal(ByteView message, const FernetKey& key) {
    check_size(message);
    return encrypt_token(gzip_compress(message), key);
}

std::string seal(ByteView message, const FernetKey& key, uint64_t timestamp, const Iv& iv) {
    check_size(message);
    return encrypt_token(gzip_compress(message), key, timestamp, iv);
}

Bytes unseal(std::string_view token, const FernetKey& key) { return gzip_decompress(decrypt_token(token, key)); }

}  // namespace ledgerseal::crypto
