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

#include <ledgerseal/crypto/fernet.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <memory>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>

namespace ledgerseal::crypto {

namespace {

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

CipherCtx new_ctx() {
    CipherCtx ctx{EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free};
    if (!ctx) throw std::bad_alloc{};
    return ctx;
}

Bytes aes128_cbc_encrypt(ByteView key, const Iv& iv, ByteView plain) {
    auto ctx{new_ctx()};
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr, key.data(), iv.data()) != 1) {
        throw std::runtime_error{"AES init failed"};
    }
    Bytes out(plain.size() + 16);
    int len{0};
    int total{0};
    if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plain.data(), static_cast<int>(plain.size())) != 1) {
        throw std::runtime_error{"AES update failed"};
    }
    total = len;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + total, &len) != 1) throw std::runtime_error{"AES final failed"};
    out.resize(static_cast<std::size_t>(total + len));
    return out;
}

//! nullopt on bad PKCS#7 padding
std::optional<Bytes> aes128_cbc_decrypt(ByteView key, ByteView iv, ByteView cipher) {
    auto ctx{new_ctx()};
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr, key.data(), iv.data()) != 1) {
        throw std::runtime_error{"AES init failed"};
    }
    Bytes out(cipher.size() + 16);
    int len{0};
    int total{0};
    if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, cipher.data(), static_cast<int>(cipher.size())) != 1) {
        return std::nullopt;
    }
    total = len;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + total, &len) != 1) return std::nullopt;
    out.resize(static_cast<std::size_t>(total + len));
    return out;
}

[[noreturn]] void malformed(const char* what) { throw Error{ErrorCode::kMalformedToken, what}; }

Bytes decode_structure(std::string_view token) {
    auto raw{base64url_decode(token)};
    if (!raw) malformed("token is not valid base64url");
    if (raw->size() < kFernetMinTokenSize) malformed("token too short");
    if ((*raw)[0] != kFernetVersion) malformed("unsupported token version");
    if ((raw->size() - kFernetHeaderSize - kFernetMacSize) % 16 != 0) malformed("ciphertext is not block aligned");
    return std::move(*raw);
}

}  // namespace

FernetKey FernetKey::generate() {
    std::array<uint8_t, kSize> raw{};
    random_bytes(raw);
    return FernetKey{raw};
}

std::optional<FernetKey> FernetKey::from_base64url(std::string_view text) {
    const auto decoded{base64url_decode(text)};
    if (!decoded || decoded->size() != kSize) return std::nullopt;
    std::array<uint8_t, kSize> raw{};
    std::copy(decoded->begin(), decoded->end(), raw.begin());
    return FernetKey{raw};
}

std::string encrypt_token(ByteView message, const FernetKey& key, uint64_t timestamp, const Iv& iv) {
    Bytes body;
    body.reserve(kFernetHeaderSize + message.size() + 16 + kFernetMacSize);
    body.push_back(kFernetVersion);
    append_be64(body, timestamp);
    body.insert(body.end(), iv.begin(), iv.end());
    const Bytes cipher{aes128_cbc_encrypt(key.encryption_key(), iv, message)};
    body.insert(body.end(), cipher.begin(), cipher.end());
    const Hash256 mac{hmac_sha256(key.signing_key(), body)};
    body.insert(body.end(), mac.begin(), mac.end());
    return base64url_encode(body);
}

std::string encrypt_token(ByteView message, const FernetKey& key) {
    Iv iv{};
    random_bytes(iv);
    const auto now{std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::system_clock::now().time_since_epoch())};
    return encrypt_token(message, key, static_cast<uint64_t>(now.count()), iv);
}

Bytes decrypt_token(std::string_view token, const FernetKey& key) {
    const Bytes raw{decode_structure(token)};
    const ByteView all{raw};
    const ByteView signed_part{all.first(raw.size() - kFernetMacSize)};
    const Hash256 expected{hmac_sha256(key.signing_key(), signed_part)};
    if (!equal_ct(expected, all.last(kFernetMacSize))) {
        throw Error{ErrorCode::kAuthenticationFailed, "token HMAC does not verify"};
    }
    const ByteView iv{all.subspan(9, 16)};
    const ByteView cipher{signed_part.subspan(kFernetHeaderSize)};
    auto plain{aes128_cbc_decrypt(key.encryption_key(), iv, cipher)};
    if (!plain) throw Error{ErrorCode::kAuthenticationFailed, "token padding is invalid"};
    return std::move(*plain);
}

std::optional<uint64_t> token_timestamp(std::string_view token) {
    try {
        const Bytes raw{decode_structure(token)};
        return read_be64(ByteView{raw}.subspan(1, 8));
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace ledgerseal::crypto
