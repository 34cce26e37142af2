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

#ifndef LEDGERSEAL_CRYPTO_SEAL_HPP_
#define LEDGERSEAL_CRYPTO_SEAL_HPP_

#include <string>
#include <string_view>

#include <ledgerseal/common/bytes.hpp>
#include <ledgerseal/crypto/fernet.hpp>

namespace ledgerseal::crypto {

// seal   = encrypt_token . gzip_compress
// unseal = gzip_decompress . decrypt_token

//! Throws Error{kInvalidInput} for a message over 1 MiB.
std::string seal(ByteView message, const FernetKey& key);
std::string seal(ByteView message, const FernetKey& key, uint64_t timestamp, const Iv& iv);

//! Errors from decrypt_token and gzip_decompress propagate unchanged.
Bytes unseal(std::string_view token, const FernetKey& key);

}  // namespace ledgerseal::crypto

#endif  // LEDGERSEAL_CRYPTO_SEAL_HPP_
