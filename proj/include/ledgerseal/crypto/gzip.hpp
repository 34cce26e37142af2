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

#ifndef LEDGERSEAL_CRYPTO_GZIP_HPP_
#define LEDGERSEAL_CRYPTO_GZIP_HPP_

#include <ledgerseal/common/bytes.hpp>

namespace ledgerseal::crypto {

inline constexpr int kGzipLevel{6};

//! Single RFC 1952 member, deflate level 6, header mtime = 0 and OS = 255 so
//! that equal inputs always compress to equal bytes.
Bytes gzip_compress(ByteView plain);

//! Inverse of gzip_compress. Accepts exactly one member with no trailing
//! bytes; output is capped at 1 MiB. Throws Error{kCorruptStream} on bad magic,
//! CRC/length mismatch, truncation or an oversized payload.
Bytes gzip_decompress(ByteView compressed);

}  // namespace ledgerseal::crypto

#endif  // LEDGERSEAL_CRYPTO_GZIP_HPP_
