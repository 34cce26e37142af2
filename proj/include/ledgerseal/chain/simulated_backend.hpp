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

#ifndef LEDGERSEAL_CHAIN_SIMULATED_BACKEND_HPP_
#define LEDGERSEAL_CHAIN_SIMULATED_BACKEND_HPP_

#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <random>
#include <shared_mutex>

#include <ledgerseal/chain/backend.hpp>
#include <ledgerseal/common/append_file.hpp>
#include <ledgerseal/gas/gas_model.hpp>

namespace ledgerseal::chain {

/// Deterministic single-contract chain wrapping ledger::TextStorage.
///
/// Accepted transactions occupy consecutive slots; slot s belongs to block
/// floor(s / block_size). A block seals automatically when its last slot is
/// filled, or early through seal_block(), which skips the block's remaining
/// slots. Calls execute at seal time, in slot order, so a receipt stays
/// Pending and the contract state is untouched until its block seals.
///
/// With a journal path every accepted transaction and every explicit seal is
/// appended (fsynced) before it takes effect; reopening replays the journal
/// through the same code path and reproduces state and receipts exactly.
///
/// submit()/seal_block() take an exclusive lock; every read takes a shared lock.
class SimulatedBackend final : public ChainBackend {
  public:
    //! Throws Error{kConfigError} when block_size is 0 or failure_rate is outside [0, 1].
    SimulatedBackend(const WalletKey& deployer, BackendConfig config, gas::GasSchedule schedule = {});

    [[nodiscard]] std::string_view kind() const noexcept override { return "simulated"; }

    //! Throws Error{kBackendUnavailable} (see set_available), Error{kDuplicateTransaction},
    //! Error{kInvalidSignature} for an unknown signer or bad signature/hash,
    //! Error{kNonceMismatch}, or Error{kStorageFailure} when the journal write fails.
    TxHash submit(const SignedTransaction& signed_tx) override;

    [[nodiscard]] std::optional<TxReceipt> get_receipt(const TxHash& hash) const override;

    //! Seals the open block if it has pending transactions and returns its
    //! number; otherwise returns the latest sealed block number (0 before any).
    uint64_t seal_block() override;

    [[nodiscard]] ledger::TextEntry get_text(uint64_t index) const override;
    [[nodiscard]] uint64_t total_texts() const override;
    [[nodiscard]] uint64_t next_nonce(const Address& sender) const override;
    [[nodiscard]] Address owner() const override;
    [[nodiscard]] Address contract_address() const override { return contract_address_; }

    //! Lets another signer submit (e.g. a non-owner in tests).
    void register_wallet(const WalletKey& key);

    //! Fault injection: while unavailable every call throws Error{kBackendUnavailable}.
    void set_available(bool available) noexcept { available_.store(available); }

    [[nodiscard]] std::size_t pending_count() const;
    [[nodiscard]] ledger::TextStorage snapshot() const;
    [[nodiscard]] const BackendConfig& config() const noexcept { return config_; }

  private:
    struct PendingTx {
        SignedTransaction signed_tx;
        uint64_t slot{0};
    };

    void check_available() const;
    void accept_locked(const SignedTransaction& signed_tx);
    uint64_t seal_locked();
    void execute_locked(const PendingTx& pending, uint64_t block_number);
    void load_journal_header();
    void replay_journal_body();

    BackendConfig config_;
    gas::GasSchedule schedule_;
    Address contract_address_;
    std::atomic<bool> available_{true};

    mutable std::shared_mutex mutex_;
    ledger::TextStorage state_;
    std::map<Address, WalletKey> signers_;
    std::map<Address, uint64_t> nonces_;
    std::map<TxHash, TxReceipt> receipts_;
    std::deque<PendingTx> pending_;
    uint64_t next_slot_{0};
    std::optional<uint64_t> last_sealed_block_;
    std::bernoulli_distribution failure_dist_;
    std::mt19937_64 rng_;
    std::unique_ptr<AppendOnlyFile> journal_;
};

//! Contract address the simulator assigns to a deployment by deployer.
Address simulated_contract_address(const Address& deployer);

}  // namespace ledgerseal::chain

#endif  // LEDGERSEAL_CHAIN_SIMULATED_BACKEND_HPP_
