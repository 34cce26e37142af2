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

#include <ledgerseal/chain/transaction.hpp>

#include <algorithm>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>
#include <ledgerseal/ledger/text_storage.hpp>

namespace ledgerseal::chain {

namespace {

void append_field(Bytes& out, ByteView field) {
    append_be32(out, static_cast<uint32_t>(field.size()));
    out.insert(out.end(), field.begin(), field.end());
}

[[noreturn]] void bad_frame(const char* what) { throw Error{ErrorCode::kInvalidInput, what}; }

class Reader {
  public:
    explicit Reader(ByteView in) : in_{in} {}

    ByteView take(std::size_t n) {
        if (in_.size() - pos_ < n) bad_frame("truncated transaction");
        const ByteView out{in_.subspan(pos_, n)};
        pos_ += n;
        return out;
    }
    uint8_t byte() { return take(1)[0]; }
    ByteView field() {
        const ByteView len{take(kFieldPrefixSize)};
        const uint32_t n{(uint32_t{len[0]} << 24) | (uint32_t{len[1]} << 16) | (uint32_t{len[2]} << 8) | len[3]};
        return take(n);
    }
    [[nodiscard]] bool done() const noexcept { return pos_ == in_.size(); }

  private:
    ByteView in_;
    std::size_t pos_{0};
};

Address address_from(ByteView raw) {
    std::array<uint8_t, Address::kSize> bytes{};
    std::copy(raw.begin(), raw.end(), bytes.begin());
    return Address{bytes};
}

}  // namespace

WalletKey::WalletKey(const std::array<uint8_t, kSize>& secret) : secret_{secret} {
    const auto digest{crypto::sha256(secret_)};
    address_ = address_from(ByteView{digest}.last<Address::kSize>());
}

WalletKey WalletKey::generate() {
    std::array<uint8_t, kSize> secret{};
    crypto::random_bytes(secret);
    return WalletKey{secret};
}

std::optional<WalletKey> WalletKey::from_hex(std::string_view hex) {
    const auto raw{ledgerseal::from_hex(hex)};
    if (!raw || raw->size() != kSize) return std::nullopt;
    std::array<uint8_t, kSize> secret{};
    std::copy(raw->begin(), raw->end(), secret.begin());
    return WalletKey{secret};
}

std::optional<TxHash> TxHash::from_hex(std::string_view hex) {
    if (hex.size() != 66 || !hex.starts_with("0x")) return std::nullopt;
    const auto raw{ledgerseal::from_hex(hex)};
    if (!raw) return std::nullopt;
    TxHash out;
    std::copy(raw->begin(), raw->end(), out.bytes.begin());
    return out;
}

Bytes Transaction::serialize() const {
    Bytes out;
    out.push_back(kTxFormatVersion);
    out.insert(out.end(), sender.bytes().begin(), sender.bytes().end());
    append_be64(out, nonce);
    if (const auto* save = std::get_if<SaveTextCall>(&call)) {
        out.reserve(kSaveTextFraming + save->token.size() + save->uid.size());
        out.push_back(kSaveTextTag);
        append_field(out, as_bytes(save->token));
        append_field(out, as_bytes(save->uid));
    } else {
        out.push_back(kTransferOwnershipTag);
        append_field(out, std::get<TransferOwnershipCall>(call).new_owner.bytes());
    }
    return out;
}

Transaction Transaction::deserialize(ByteView raw) {
    Reader reader{raw};
    if (reader.byte() != kTxFormatVersion) bad_frame("unknown transaction format version");
    Transaction tx;
    tx.sender = address_from(reader.take(Address::kSize));
    tx.nonce = read_be64(reader.take(8));
    switch (reader.byte()) {
        case kSaveTextTag: {
            SaveTextCall save;
            save.token = to_string(reader.field());
            save.uid = to_string(reader.field());
            tx.call = std::move(save);
            break;
        }
        case kTransferOwnershipTag: {
            const ByteView owner{reader.field()};
            if (owner.size() != Address::kSize) bad_frame("new owner must be 20 bytes");
            tx.call = TransferOwnershipCall{address_from(owner)};
            break;
        }
        default:
            bad_frame("unknown call tag");
    }
    if (!reader.done()) bad_frame("trailing bytes after transaction");
    return tx;
}

Transaction build_tx(const Address& sender, uint64_t nonce, ContractCall call) {
    if (const auto* save = std::get_if<SaveTextCall>(&call)) {
        if (save->token.empty()) bad_frame("token must not be empty");
        if (save->uid.empty()) bad_frame("uid must not be empty");
        if (save->uid.size() > ledger::kMaxUidSize) bad_frame("uid exceeds 256 bytes");
        if (save->token.size() > kMaxPayloadSize) bad_frame("token exceeds 1 MiB");
    }
    return Transaction{sender, nonce, std::move(call)};
}

TxHash compute_tx_hash(ByteView serialized, ByteView signature) {
    Bytes preimage{serialized.begin(), serialized.end()};
    preimage.insert(preimage.end(), signature.begin(), signature.end());
    return TxHash{crypto::sha256(preimage)};
}

SignedTransaction sign_tx(const Transaction& tx, const WalletKey& key) {
    if (key.address() != tx.sender) {
        throw Error{ErrorCode::kSenderKeyMismatch,
                    "key address " + key.address().to_hex() + " does not match sender " + tx.sender.to_hex()};
    }
    const Bytes serialized{tx.serialize()};
    SignedTransaction out{tx, crypto::hmac_sha256(key.secret(), serialized), {}};
    out.hash = compute_tx_hash(serialized, out.signature);
    return out;
}

bool verify_signature(const SignedTransaction& signed_tx, const WalletKey& key) {
    if (key.address() != signed_tx.tx.sender) return false;
    const Bytes serialized{signed_tx.tx.serialize()};
    const auto expected{crypto::hmac_sha256(key.secret(), serialized)};
    return crypto::equal_ct(expected, signed_tx.signature) &&
           compute_tx_hash(serialized, signed_tx.signature) == signed_tx.hash;
}

}  // namespace ledgerseal::chain
