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

#include <ledgerseal/crypto/hash.hpp>

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal::crypto {

Hash256 sha256(ByteView data) {
    Hash256 out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

std::string sha256_hex(ByteView data) { return to_hex(sha256(data)); }

Hash256 hmac_sha256(ByteView key, ByteView data) {
    Hash256 out{};
    unsigned int len{0};
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ==
            nullptr ||
        len != out.size()) {
        throw Error{ErrorCode::kAuthenticationFailed, "HMAC computation failed"};
    }
    return out;
}

bool equal_ct(ByteView a, ByteView b) noexcept {
    return a.size() == b.size() && CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void random_bytes(std::span<uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
        throw Error{ErrorCode::kEntropyUnavailable, "system CSPRNG unavailable"};
    }
}

}  // namespace ledgerseal::crypto
