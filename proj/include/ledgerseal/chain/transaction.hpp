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

#ifndef LEDGERSEAL_CHAIN_TRANSACTION_HPP_
#define LEDGERSEAL_CHAIN_TRANSACTION_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <ledgerseal/common/bytes.hpp>
#include <ledgerseal/ledger/address.hpp>

namespace ledgerseal::chain {

//! Simulator signing key. The address is the last 20 bytes of SHA-256(private).
//! This stands in for secp256k1; it is not a real EVM account scheme.
class WalletKey {
  public:
    static constexpr std::size_t kSize{32};

    explicit WalletKey(const std::array<uint8_t, kSize>& secret);

    //! Throws Error{kEntropyUnavailable}.
    static WalletKey generate();
    static std::optional<WalletKey> from_hex(std::string_view hex);

    [[nodiscard]] std::string to_hex() const { return ledgerseal::to_hex(secret_, /*with_prefix=*/true); }
    [[nodiscard]] const Address& address() const noexcept { return address_; }
    [[nodiscard]] ByteView secret() const noexcept { return secret_; }

  private:
    std::array<uint8_t, kSize> secret_;
    Address address_;
};

struct TxHash {
    std::array<uint8_t, 32> bytes{};

    //! "0x" + 64 lowercase hex digits.
    [[nodiscard]] std::string to_hex() const { return ledgerseal::to_hex(bytes, /*with_prefix=*/true); }
    //! Requires the 0x prefix and exactly 64 hex digits.
    static std::optional<TxHash> from_hex(std::string_view hex);

    friend auto operator<=>(const TxHash&, const TxHash&) = default;
};

struct SaveTextCall {
    std::string token;
    std::string uid;
    friend bool operator==(const SaveTextCall&, const SaveTextCall&) = default;
};

struct TransferOwnershipCall {
    Address new_owner;
    friend bool operator==(const TransferOwnershipCall&, const TransferOwnershipCall&) = default;
};

using ContractCall = std::variant<SaveTextCall, TransferOwnershipCall>;

/// Canonical serialization:
///
///   0x01 | sender (20) | nonce (8, BE) | call tag (1) | fields...
///
/// where each field is a 4-byte big-endian length followed by its bytes.
/// SaveText (tag 0x01) carries token then uid; TransferOwnership (tag 0x02)
/// carries the 20-byte new owner.
inline constexpr uint8_t kTxFormatVersion{0x01};
inline constexpr uint8_t kSaveTextTag{0x01};
inline constexpr uint8_t kTransferOwnershipTag{0x02};
inline constexpr std::size_t kTxHeaderSize{1 + Address::kSize + 8 + 1};
inline constexpr std::size_t kFieldPrefixSize{4};
//! SaveText payload_bytes = token + uid + this.
inline constexpr std::size_t kSaveTextFraming{kTxHeaderSize + 2 * kFieldPrefixSize};

struct Transaction {
    Address sender;
    uint64_t nonce{0};
    ContractCall call;

    [[nodiscard]] Bytes serialize() const;
    [[nodiscard]] std::size_t payload_bytes() const { return serialize().size(); }

    //! Inverse of serialize(). Throws Error{kInvalidInput} on any framing error.
    static Transaction deserialize(ByteView raw);

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

//! Validates the call against the contract's input rules (non-empty token and
//! uid, uid <= 256 bytes, token <= 1 MiB). Throws Error{kInvalidInput}.
Transaction build_tx(const Address& sender, uint64_t nonce, ContractCall call);

struct SignedTransaction {
    Transaction tx;
    std::array<uint8_t, 32> signature{};  // HMAC-SHA256(secret, serialize())
    TxHash hash;                          // SHA-256(serialize() || signature)
};

//! Throws Error{kSenderKeyMismatch} when key.address() != tx.sender.
SignedTransaction sign_tx(const Transaction& tx, const WalletKey& key);

//! Recomputes signature and hash under key.
bool verify_signature(const SignedTransaction& signed_tx, const WalletKey& key);

TxHash compute_tx_hash(ByteView serialized, ByteView signature);

}  // namespace ledgerseal::chain

#endif  // LEDGERSEAL_CHAIN_TRANSACTION_HPP_
