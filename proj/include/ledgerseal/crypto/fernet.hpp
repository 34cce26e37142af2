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

#ifndef LEDGERSEAL_CRYPTO_FERNET_HPP_
#define LEDGERSEAL_CRYPTO_FERNET_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <ledgerseal/common/bytes.hpp>

namespace ledgerseal::crypto {

/// Fernet token layout (all integers big-endian), base64url encoded:
///
///   0x80 | timestamp (8) | IV (16) | AES-128-CBC ciphertext (16*n) | HMAC-SHA256 (32)
///
/// The HMAC covers every byte before it and is keyed with the first half of the
/// 32-byte key; AES uses the second half.
inline constexpr uint8_t kFernetVersion{0x80};
inline constexpr std::size_t kFernetHeaderSize{1 + 8 + 16};
inline constexpr std::size_t kFernetMacSize{32};
inline constexpr std::size_t kFernetMinTokenSize{kFernetHeaderSize + 16 + kFernetMacSize};

using Iv = std::array<uint8_t, 16>;

class FernetKey {
  public:
    static constexpr std::size_t kSize{32};

    explicit FernetKey(const std::array<uint8_t, kSize>& raw) : raw_{raw} {}

    //! 32 bytes from the CSPRNG. Throws Error{kEntropyUnavailable}.
    static FernetKey generate();

    //! Accepts the 44-char padded form (or unpadded); must decode to exactly 32 bytes.
    static std::optional<FernetKey> from_base64url(std::string_view text);

    [[nodiscard]] std::string to_base64url() const { return base64url_encode(raw_); }

    [[nodiscard]] ByteView signing_key() const noexcept { return ByteView{raw_}.first<16>(); }
    [[nodiscard]] ByteView encryption_key() const noexcept { return ByteView{raw_}.last<16>(); }
    [[nodiscard]] const std::array<uint8_t, kSize>& raw() const noexcept { return raw_; }

    friend bool operator==(const FernetKey&, const FernetKey&) = default;

  private:
    std::array<uint8_t, kSize> raw_;
};

//! Encrypts with caller-supplied timestamp and IV; equal inputs give equal tokens.
std::string encrypt_token(ByteView message, const FernetKey& key, uint64_t timestamp, const Iv& iv);

//! Fresh random IV and the current time.
std::string encrypt_token(ByteView message, const FernetKey& key);

//! Verifies and decrypts. No TTL is enforced.
//! Throws Error{kMalformedToken} for bad base64url, a short token, a wrong version byte or
//! a ciphertext that is not a whole number of blocks; Error{kAuthenticationFailed} when the
//! HMAC does not verify or the padding is invalid.
Bytes decrypt_token(std::string_view token, const FernetKey& key);

//! Timestamp field of a token that passes the structural checks (no MAC check).
std::optional<uint64_t> token_timestamp(std::string_view token);

}  // namespace ledgerseal::crypto

#endif  // LEDGERSEAL_CRYPTO_FERNET_HPP_
