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

#include <ledgerseal/common/bytes.hpp>

#include <array>

namespace ledgerseal {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";
constexpr char kBase64Url[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr std::array<int8_t, 256> make_base64_table() {
    std::array<int8_t, 256> table{};
    for (auto& v : table) v = -1;
    for (int i = 0; i < 64; ++i) table[static_cast<uint8_t>(kBase64Url[i])] = static_cast<int8_t>(i);
    return table;
}

constexpr auto kBase64Table{make_base64_table()};

}  // namespace

std::string to_hex(ByteView bytes, bool with_prefix) {
    std::string out;
    out.reserve(bytes.size() * 2 + 2);
    if (with_prefix) out += "0x";
    for (uint8_t b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

std::optional<Bytes> from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.size() % 2 != 0) return std::nullopt;
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi{hex_value(hex[2 * i])};
        const int lo{hex_value(hex[2 * i + 1])};
        if (hi < 0 || lo < 0) return std::nullopt;
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string base64url_encode(ByteView bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i{0};
    for (; i + 3 <= bytes.size(); i += 3) {
        const uint32_t n{(uint32_t{bytes[i]} << 16) | (uint32_t{bytes[i + 1]} << 8) | bytes[i + 2]};
        out.push_back(kBase64Url[(n >> 18) & 0x3f]);
        out.push_back(kBase64Url[(n >> 12) & 0x3f]);
        out.push_back(kBase64Url[(n >> 6) & 0x3f]);
        out.push_back(kBase64Url[n & 0x3f]);
    }
    const std::size_t rest{bytes.size() - i};
    if (rest == 1) {
        const uint32_t n{uint32_t{bytes[i]} << 16};
        out.push_back(kBase64Url[(n >> 18) & 0x3f]);
        out.push_back(kBase64Url[(n >> 12) & 0x3f]);
        out += "==";
    } else if (rest == 2) {
        const uint32_t n{(uint32_t{bytes[i]} << 16) | (uint32_t{bytes[i + 1]} << 8)};
        out.push_back(kBase64Url[(n >> 18) & 0x3f]);
        out.push_back(kBase64Url[(n >> 12) & 0x3f]);
        out.push_back(kBase64Url[(n >> 6) & 0x3f]);
        out += '=';
    }
    return out;
}

std::optional<Bytes> base64url_decode(std::string_view text) {
    std::size_t padding{0};
    if (text.size() % 4 == 0) {
        while (padding < 2 && !text.empty() && text.back() == '=') {
            text.remove_suffix(1);
            ++padding;
        }
        if (padding > 0 && text.size() % 4 + padding != 4) return std::nullopt;
    }
    const std::size_t tail{text.size() % 4};
    if (tail == 1) return std::nullopt;

    Bytes out;
    out.reserve(text.size() * 3 / 4);
    uint32_t acc{0};
    int bits{0};
    for (char c : text) {
        const int v{kBase64Table[static_cast<uint8_t>(c)]};
        if (v < 0) return std::nullopt;
        acc = (acc << 6) | static_cast<uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<uint8_t>((acc >> bits) & 0xff));
        }
    }
    // leftover bits must be zero for a canonical encoding
    if (bits > 0 && (acc & ((1u << bits) - 1)) != 0) return std::nullopt;
    return out;
}

void append_be64(Bytes& out, uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<uint8_t>(value >> shift));
}

void append_be32(Bytes& out, uint32_t value) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<uint8_t>(value >> shift));
}

uint64_t read_be64(ByteView in) noexcept {
    uint64_t v{0};
    for (std::size_t i = 0; i < 8 && i < in.size(); ++i) v = (v << 8) | in[i];
    return v;
}

}  // namespace ledgerseal
