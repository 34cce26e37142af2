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

#ifndef LEDGERSEAL_CRYPTO_HASH_HPP_
#define LEDGERSEAL_CRYPTO_HASH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include <ledgerseal/common/bytes.hpp>

namespace ledgerseal::crypto {

using Hash256 = std::array<uint8_t, 32>;

Hash256 sha256(ByteView data);

//! Hex SHA-256, the digest rendering used by the registry.
std::string sha256_hex(ByteView data);

Hash256 hmac_sha256(ByteView key, ByteView data);

//! Constant-time equality.
bool equal_ct(ByteView a, ByteView b) noexcept;

//! Fills out from the OS CSPRNG. Throws Error{kEntropyUnavailable}.
void random_bytes(std::span<uint8_t> out);

}  // namespace ledgerseal::crypto

#endif  // LEDGERSEAL_CRYPTO_HASH_HPP_
