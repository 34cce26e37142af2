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

#include <ledgerseal/chain/simulated_backend.hpp>

#include <mutex>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>

namespace ledgerseal::chain {

using nlohmann::json;

namespace {

constexpr std::string_view kContractSalt{"ledgerseal/TextStorage"};

void validate(const BackendConfig& config) {
    if (config.block_size == 0) throw Error{ErrorCode::kConfigError, "block_size must be positive"};
    if (!(config.failure_rate >= 0.0 && config.failure_rate <= 1.0)) {
        throw Error{ErrorCode::kConfigError, "failure_rate must be within [0, 1]"};
    }
}

[[noreturn]] void corrupt_journal(const std::string& what) {
    throw Error{ErrorCode::kStorageFailure, "chain journal: " + what};
}

}  // namespace

Address simulated_contract_address(const Address& deployer) {
    Bytes preimage{to_bytes(kContractSalt)};
    preimage.insert(preimage.end(), deployer.bytes().begin(), deployer.bytes().end());
    const auto digest{crypto::sha256(preimage)};
    std::array<uint8_t, Address::kSize> raw{};
    std::copy(digest.end() - Address::kSize, digest.end(), raw.begin());
    return Address{raw};
}

SimulatedBackend::SimulatedBackend(const WalletKey& deployer, BackendConfig config, gas::GasSchedule schedule)
    : config_{std::move(config)},
      schedule_{schedule},
      contract_address_{simulated_contract_address(deployer.address())},
      state_{ledger::TextStorage::deploy(deployer.address())} {
    validate(config_);
    signers_.emplace(deployer.address(), deployer);
    if (config_.journal_path) {
        journal_ = std::make_unique<AppendOnlyFile>(*config_.journal_path);
        if (journal_->initial_lines().empty()) {
            const json deploy{{"op", "deploy"},
                              {"owner", deployer.address().to_hex()},
                              {"block_size", config_.block_size},
                              {"failure_rate", config_.failure_rate},
                              {"seed", config_.seed}};
            journal_->append(deploy.dump());
        } else {
            load_journal_header();
        }
    }
    rng_.seed(config_.seed);
    failure_dist_ = std::bernoulli_distribution{config_.failure_rate};
    if (journal_ && journal_->initial_lines().size() > 1) replay_journal_body();
}

void SimulatedBackend::load_journal_header() {
    json header;
    try {
        header = json::parse(journal_->initial_lines().front());
        if (header.at("op").get<std::string>() != "deploy") corrupt_journal("first entry must be a deployment");
        const auto owner{Address::from_hex(header.at("owner").get<std::string>())};
        if (!owner) corrupt_journal("bad deployer address");
        if (*owner != state_.owner()) {
            throw Error{ErrorCode::kConfigError, "chain journal " + config_.journal_path->string() +
                                                     " was deployed by " + owner->to_hex() + ", not " +
                                                     state_.owner().to_hex()};
        }
        const BackendConfig requested{config_};
        config_.block_size = header.at("block_size").get<uint64_t>();
        config_.failure_rate = header.at("failure_rate").get<double>();
        config_.seed = header.at("seed").get<uint64_t>();
        validate(config_);
        if (requested.block_size != config_.block_size || requested.failure_rate != config_.failure_rate ||
            requested.seed != config_.seed) {
            spdlog::warn("chain journal {} was created with different parameters; using the journal's",
                         config_.journal_path->string());
        }
    } catch (const json::exception& e) {
        corrupt_journal(e.what());
    }
}

void SimulatedBackend::replay_journal_body() {
    const auto& lines{journal_->initial_lines()};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        json entry;
        try {
            entry = json::parse(lines[i]);
            const std::string op{entry.at("op").get<std::string>()};
            if (op == "submit") {
                const auto raw{from_hex(entry.at("tx").get<std::string>())};
                const auto sig{from_hex(entry.at("sig").get<std::string>())};
                if (!raw || !sig || sig->size() != 32) corrupt_journal("bad submit entry at line " + std::to_string(i + 1));
                SignedTransaction signed_tx{Transaction::deserialize(*raw), {}, {}};
                std::copy(sig->begin(), sig->end(), signed_tx.signature.begin());
                signed_tx.hash = compute_tx_hash(*raw, signed_tx.signature);
                accept_locked(signed_tx);
            } else if (op == "seal") {
                seal_locked();
            } else {
                corrupt_journal("unknown op '" + op + "' at line " + std::to_string(i + 1));
            }
        } catch (const json::exception& e) {
            corrupt_journal(std::string{"line "} + std::to_string(i + 1) + ": " + e.what());
        } catch (const Error& e) {
            if (e.code() == ErrorCode::kStorageFailure) throw;
            corrupt_journal(std::string{"line "} + std::to_string(i + 1) + ": " + e.what());
        }
    }
    spdlog::debug("replayed {} journal entries from {}", lines.size() - 1, config_.journal_path->string());
}

void SimulatedBackend::check_available() const {
    if (!available_.load()) throw Error{ErrorCode::kBackendUnavailable, "simulated backend is unavailable"};
}

TxHash SimulatedBackend::submit(const SignedTransaction& signed_tx) {
    check_available();
    std::unique_lock lock{mutex_};
    if (receipts_.contains(signed_tx.hash)) {
        throw Error{ErrorCode::kDuplicateTransaction, "transaction " + signed_tx.hash.to_hex() + " already submitted"};
    }
    const auto signer{signers_.find(signed_tx.tx.sender)};
    if (signer == signers_.end() || !verify_signature(signed_tx, signer->second)) {
        throw Error{ErrorCode::kInvalidSignature, "signature does not verify for " + signed_tx.tx.sender.to_hex()};
    }
    const uint64_t expected{nonces_.contains(signed_tx.tx.sender) ? nonces_.at(signed_tx.tx.sender) : 0};
    if (signed_tx.tx.nonce != expected) {
        throw Error{ErrorCode::kNonceMismatch,
                    "nonce " + std::to_string(signed_tx.tx.nonce) + " but expected " + std::to_string(expected)};
    }
    if (journal_) {
        const json entry{{"op", "submit"},
                         {"tx", to_hex(signed_tx.tx.serialize())},
                         {"sig", to_hex(signed_tx.signature)}};
        journal_->append(entry.dump());
    }
    accept_locked(signed_tx);
    return signed_tx.hash;
}

void SimulatedBackend::accept_locked(const SignedTransaction& signed_tx) {
    if (receipts_.contains(signed_tx.hash)) corrupt_journal("duplicate transaction " + signed_tx.hash.to_hex());
    ++nonces_[signed_tx.tx.sender];
    const uint64_t slot{next_slot_++};
    receipts_.emplace(signed_tx.hash, TxReceipt{signed_tx.hash, TxStatus::kPending, {}, {}, {}, {}});
    pending_.push_back(PendingTx{signed_tx, slot});
    if ((slot + 1) % config_.block_size == 0) seal_locked();
}

uint64_t SimulatedBackend::seal_block() {
    check_available();
    std::unique_lock lock{mutex_};
    if (pending_.empty()) return last_sealed_block_.value_or(0);
    if (journal_) journal_->append(json{{"op", "seal"}}.dump());
    return seal_locked();
}

uint64_t SimulatedBackend::seal_locked() {
    if (pending_.empty()) return last_sealed_block_.value_or(0);
    const uint64_t block{pending_.front().slot / config_.block_size};
    while (!pending_.empty()) {
        execute_locked(pending_.front(), block);
        pending_.pop_front();
    }
    last_sealed_block_ = block;
    next_slot_ = (block + 1) * config_.block_size;
    return block;
}

void SimulatedBackend::execute_locked(const PendingTx& pending, uint64_t block_number) {
    const Transaction& tx{pending.signed_tx.tx};
    TxReceipt& receipt{receipts_.at(pending.signed_tx.hash)};
    receipt.block_number = block_number;
    receipt.gas_used = gas::estimate_gas(schedule_, tx.payload_bytes());

    if (failure_dist_(rng_)) {
        receipt.status = TxStatus::kFailed;
        receipt.failure_reason = "injected";
        return;
    }
    try {
        if (const auto* save = std::get_if<SaveTextCall>(&tx.call)) {
            receipt.entry_index = state_.save_text(tx.sender, save->token, save->uid);
        } else {
            state_.transfer_ownership(tx.sender, std::get<TransferOwnershipCall>(tx.call).new_owner);
        }
        receipt.status = TxStatus::kSuccess;
    } catch (const Error& e) {
        receipt.status = TxStatus::kFailed;
        receipt.failure_reason = std::string{to_string(e.code())};
    }
}

std::optional<TxReceipt> SimulatedBackend::get_receipt(const TxHash& hash) const {
    check_available();
    std::shared_lock lock{mutex_};
    const auto it{receipts_.find(hash)};
    if (it == receipts_.end()) return std::nullopt;
    return it->second;
}

ledger::TextEntry SimulatedBackend::get_text(uint64_t index) const {
    check_available();
    std::shared_lock lock{mutex_};
    return state_.get_text(index);
}

uint64_t SimulatedBackend::total_texts() const {
    check_available();
    std::shared_lock lock{mutex_};
    return state_.total_texts();
}

uint64_t SimulatedBackend::next_nonce(const Address& sender) const {
    check_available();
    std::shared_lock lock{mutex_};
    const auto it{nonces_.find(sender)};
    return it == nonces_.end() ? 0 : it->second;
}

Address SimulatedBackend::owner() const {
    check_available();
    std::shared_lock lock{mutex_};
    return state_.owner();
}

void SimulatedBackend::register_wallet(const WalletKey& key) {
    std::unique_lock lock{mutex_};
    signers_.insert_or_assign(key.address(), key);
}

std::size_t SimulatedBackend::pending_count() const {
    std::shared_lock lock{mutex_};
    return pending_.size();
}

ledger::TextStorage SimulatedBackend::snapshot() const {
    std::shared_lock lock{mutex_};
    return state_;
}

}  // namespace ledgerseal::chain
