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

#include <ledgerseal/crypto/gzip.hpp>

#include <zlib.h>

#include <array>
#include <memory>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal::crypto {

namespace {

constexpr int kGzipWindowBits{15 + 16};
constexpr std::size_t kMinGzipSize{18};  // 10-byte header + empty deflate block + 8-byte trailer

struct DeflateStream {
    z_stream zs{};
    DeflateStream() {
        if (deflateInit2(&zs, kGzipLevel, Z_DEFLATED, kGzipWindowBits, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
            throw std::bad_alloc{};
        }
    }
    ~DeflateStream() { deflateEnd(&zs); }
    DeflateStream(const DeflateStream&) = delete;
    DeflateStream& operator=(const DeflateStream&) = delete;
};

struct InflateStream {
    z_stream zs{};
    InflateStream() {
        if (inflateInit2(&zs, kGzipWindowBits) != Z_OK) throw std::bad_alloc{};
    }
    ~InflateStream() { inflateEnd(&zs); }
    InflateStream(const InflateStream&) = delete;
    InflateStream& operator=(const InflateStream&) = delete;
};

[[noreturn]] void corrupt(const char* what) { throw Error{ErrorCode::kCorruptStream, what}; }

}  // namespace

Bytes gzip_compress(ByteView plain) {
    DeflateStream stream;
    gz_header header{};
    header.time = 0;
    header.os = 255;
    if (deflateSetHeader(&stream.zs, &header) != Z_OK) throw std::runtime_error{"deflateSetHeader failed"};

    Bytes out(deflateBound(&stream.zs, static_cast<uLong>(plain.size())) + 32);
    stream.zs.next_in = const_cast<Bytef*>(plain.data());
    stream.zs.avail_in = static_cast<uInt>(plain.size());
    stream.zs.next_out = out.data();
    stream.zs.avail_out = static_cast<uInt>(out.size());
    if (deflate(&stream.zs, Z_FINISH) != Z_STREAM_END) throw std::runtime_error{"deflate did not finish"};
    out.resize(stream.zs.total_out);
    return out;
}

Bytes gzip_decompress(ByteView compressed) {
    if (compressed.size() < kMinGzipSize) corrupt("gzip stream too short");
    if (compressed[0] != 0x1f || compressed[1] != 0x8b || compressed[2] != Z_DEFLATED) corrupt("bad gzip magic");

    InflateStream stream;
    stream.zs.next_in = const_cast<Bytef*>(compressed.data());
    stream.zs.avail_in = static_cast<uInt>(compressed.size());

    Bytes out;
    std::array<uint8_t, 16 * 1024> chunk{};
    for (;;) {
        stream.zs.next_out = chunk.data();
        stream.zs.avail_out = static_cast<uInt>(chunk.size());
        const int rc{inflate(&stream.zs, Z_NO_FLUSH)};
        const std::size_t produced{chunk.size() - stream.zs.avail_out};
        if (out.size() + produced > kMaxPayloadSize) corrupt("decompressed payload exceeds 1 MiB");
        out.insert(out.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(produced));
        if (rc == Z_STREAM_END) break;
        if (rc == Z_BUF_ERROR && stream.zs.avail_in == 0) corrupt("truncated gzip stream");
        if (rc != Z_OK) corrupt(stream.zs.msg != nullptr ? stream.zs.msg : "invalid gzip stream");
    }
    if (stream.zs.avail_in != 0) corrupt("trailing bytes after gzip member");
    return out;
}

}  // namespace ledgerseal::crypto
