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

#ifndef LEDGERSEAL_CHAIN_BACKEND_HPP_
#define LEDGERSEAL_CHAIN_BACKEND_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <ledgerseal/chain/transaction.hpp>
#include <ledgerseal/gas/gas_model.hpp>
#include <ledgerseal/ledger/text_storage.hpp>

namespace ledgerseal::chain {

enum class TxStatus { kPending, kSuccess, kFailed };

std::string_view to_string(TxStatus status) noexcept;

struct TxReceipt {
    TxHash tx_hash;
    TxStatus status{TxStatus::kPending};
    std::string failure_reason;  // set iff kFailed, e.g. "unauthorized", "injected"
    std::optional<uint64_t> block_number;
    std::optional<uint64_t> gas_used;
    std::optional<uint64_t> entry_index;  // successful SaveText only

    friend bool operator==(const TxReceipt&, const TxReceipt&) = default;
};

enum class BackendMode { kSimulated, kRemoteReceiptOnly };

struct BackendConfig {
    BackendMode mode{BackendMode::kSimulated};
    uint64_t block_size{4};
    double failure_rate{0.0};
    uint64_t seed{0x5eed};  // failure-injection RNG
    std::string rpc_url;
    std::optional<std::filesystem::path> journal_path;  // simulated chain persistence
};

//! Common surface over the embedded simulator and a remote EVM node.
//!
//! Every method may throw Error{kBackendUnavailable} when the backend cannot
//! be reached or does not support the operation.
class ChainBackend {
  public:
    virtual ~ChainBackend() = default;

    //! "simulated" or "remote".
    [[nodiscard]] virtual std::string_view kind() const noexcept = 0;

    virtual TxHash submit(const SignedTransaction& signed_tx) = 0;
    [[nodiscard]] virtual std::optional<TxReceipt> get_receipt(const TxHash& hash) const = 0;
    virtual uint64_t seal_block() = 0;

    [[nodiscard]] virtual ledger::TextEntry get_text(uint64_t index) const = 0;
    [[nodiscard]] virtual uint64_t total_texts() const = 0;
    [[nodiscard]] virtual uint64_t next_nonce(const Address& sender) const = 0;
    [[nodiscard]] virtual Address owner() const = 0;
    [[nodiscard]] virtual Address contract_address() const = 0;
};

//! Simulated: deploys (or replays from config.journal_path) a contract owned by
//! deployer.address() and registers deployer as a known signer.
//! Remote: receipt-only JSON-RPC client for config.rpc_url.
//! Throws Error{kConfigError} for an invalid config.
std::shared_ptr<ChainBackend> make_backend(const BackendConfig& config, const WalletKey& deployer,
                                           const std::optional<Address>& contract_address = std::nullopt,
                                           const gas::GasSchedule& schedule = {});

}  // namespace ledgerseal::chain

#endif  // LEDGERSEAL_CHAIN_BACKEND_HPP_
