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

#ifndef LEDGERSEAL_COMMON_BYTES_HPP_
#define LEDGERSEAL_COMMON_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ledgerseal {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

//! Upper bound on review plaintext and on a single ledger entry text.
inline constexpr std::size_t kMaxPayloadSize = 1024 * 1024;

inline ByteView as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline std::string to_string(ByteView b) { return {reinterpret_cast<const char*>(b.data()), b.size()}; }

inline Bytes to_bytes(std::string_view s) {
    const auto view{as_bytes(s)};
    return {view.begin(), view.end()};
}

//! Lowercase hex, no prefix.
std::string to_hex(ByteView bytes, bool with_prefix = false);

//! Accepts an optional "0x" prefix; either case. Returns nullopt on odd length or bad digits.
std::optional<Bytes> from_hex(std::string_view hex);

//! RFC 4648 base64url with '=' padding (the Fernet rendering).
std::string base64url_encode(ByteView bytes);

//! Strict decoder: rejects characters outside the url-safe alphabet, misplaced padding and
//! non-zero trailing bits, so every distinct string decodes to distinct bytes. Padding may be omitted.
std::optional<Bytes> base64url_decode(std::string_view text);

//! Serialize as fixed-width big-endian.
void append_be64(Bytes& out, uint64_t value);
void append_be32(Bytes& out, uint32_t value);
uint64_t read_be64(ByteView in) noexcept;

}  // namespace ledgerseal

#endif  // LEDGERSEAL_COMMON_BYTES_HPP_
