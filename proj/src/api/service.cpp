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

#include <ledgerseal/api/service.hpp>

#include <spdlog/spdlog.h>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>
#include <ledgerseal/crypto/seal.hpp>
#include <ledgerseal/ledger/text_storage.hpp>

namespace ledgerseal::api {

std::string contract_fingerprint(const Address& contract, const Address& owner) {
    Bytes preimage{contract.bytes().begin(), contract.bytes().end()};
    preimage.insert(preimage.end(), owner.bytes().begin(), owner.bytes().end());
    return crypto::sha256_hex(preimage);
}

ReviewService::ReviewService(ServiceConfig config, ServiceOptions options)
    : config_{std::move(config)}, options_{std::move(options)} {
    pricing_ = config_.pricing_path ? gas::PricingConfig::load(*config_.pricing_path) : gas::PricingConfig::defaults();
    if (!config_.enabled) return;
    if (!config_.wallet || !config_.fernet_key) throw Error{ErrorCode::kConfigError, "wallet and fernet key required"};
    backend_ = chain::make_backend(config_.backend, *config_.wallet, config_.contract_address, pricing_.schedule);
    init();
}

ReviewService::ReviewService(ServiceConfig config, std::shared_ptr<chain::ChainBackend> backend,
                             ServiceOptions options)
    : config_{std::move(config)}, options_{std::move(options)}, backend_{std::move(backend)} {
    pricing_ = config_.pricing_path ? gas::PricingConfig::load(*config_.pricing_path) : gas::PricingConfig::defaults();
    if (!config_.enabled) {
        backend_.reset();
        return;
    }
    if (!config_.wallet || !config_.fernet_key) throw Error{ErrorCode::kConfigError, "wallet and fernet key required"};
    init();
}

void ReviewService::init() {
    const Address contract{backend_->contract_address()};
    if (backend_->kind() == "simulated" && config_.contract_address && *config_.contract_address != contract) {
        throw Error{ErrorCode::kConfigError, std::string{kEnvContractAddress} + " " +
                                                 config_.contract_address->to_hex() +
                                                 " does not match the deployed contract " + contract.to_hex()};
    }
    const Address owner{backend_->kind() == "simulated" ? backend_->owner() : config_.wallet->address()};
    fingerprint_ = contract_fingerprint(contract, owner);
    spdlog::info("contract {} owner {} fingerprint {}", contract.to_hex(), owner.to_hex(), fingerprint_);
    if (config_.fingerprint_pin && *config_.fingerprint_pin != fingerprint_) {
        throw Error{ErrorCode::kConfigError, "contract fingerprint " + fingerprint_ + " does not match " +
                                                 kEnvFingerprintPin + " " + *config_.fingerprint_pin};
    }
    registry_ = std::make_unique<registry::Registry>(config_.registry_path, options_.clock);
}

void ReviewService::require_enabled() const {
    if (!config_.enabled) throw Error{ErrorCode::kServiceDisabled, "blockchain integration is disabled"};
}

crypto::Iv ReviewService::next_iv() const {
    if (options_.iv_source) return options_.iv_source();
    crypto::Iv iv{};
    crypto::random_bytes(iv);
    return iv;
}

std::string_view ReviewService::backend_kind() const noexcept {
    return config_.backend.mode == chain::BackendMode::kSimulated ? "simulated" : "remote";
}

SaveResult ReviewService::save_review(std::string_view uid, ByteView text) {
    require_enabled();
    if (uid.empty()) throw Error{ErrorCode::kInvalidInput, "uid must not be empty"};
    if (uid.size() > ledger::kMaxUidSize) throw Error{ErrorCode::kInvalidInput, "uid exceeds 256 bytes"};
    if (text.empty()) throw Error{ErrorCode::kInvalidInput, "text must not be empty"};
    if (registry_->contains(uid)) throw Error{ErrorCode::kDuplicateUid, "uid '" + std::string{uid} + "' already exists"};

    const std::string token{crypto::seal(text, *config_.fernet_key, unix_seconds(options_.clock()), next_iv())};

    std::lock_guard lock{write_mutex_};
    if (registry_->contains(uid)) throw Error{ErrorCode::kDuplicateUid, "uid '" + std::string{uid} + "' already exists"};

    const Address sender{config_.wallet->address()};
    const auto tx{chain::build_tx(sender, backend_->next_nonce(sender), chain::SaveTextCall{token, std::string{uid}})};
    const auto signed_tx{chain::sign_tx(tx, *config_.wallet)};
    try {
        backend_->submit(signed_tx);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::kBackendUnavailable || e.code() == ErrorCode::kStorageFailure) throw;
        throw Error{ErrorCode::kTxFailed, std::string{"submit rejected: "} + e.what()};
    }
    auto receipt{backend_->get_receipt(signed_tx.hash)};
    if (receipt && receipt->status == chain::TxStatus::kPending) {
        backend_->seal_block();
        receipt = backend_->get_receipt(signed_tx.hash);
    }
    if (!receipt || receipt->status != chain::TxStatus::kSuccess || !receipt->entry_index) {
        const std::string reason{!receipt                                         ? "receipt missing"
                                 : receipt->status == chain::TxStatus::kPending ? "still pending"
                                                                                  : receipt->failure_reason};
        throw Error{ErrorCode::kTxFailed, "transaction " + signed_tx.hash.to_hex() + " failed: " + reason};
    }
    const auto record{registry_->record_save(uid, *receipt->entry_index, signed_tx.hash.to_hex(), text)};
    return SaveResult{record.uid, record.tx_hash, record.entry_index, receipt->gas_used.value_or(0)};
}

ReviewView ReviewService::get_review(std::string_view uid) const {
    require_enabled();
    const auto record{registry_->lookup(uid)};
    if (!record) throw Error{ErrorCode::kNotFound, "uid '" + std::string{uid} + "' not found"};
    const auto entry{backend_->get_text(record->entry_index)};
    return ReviewView{record->uid, crypto::unseal(entry.text, *config_.fernet_key), record->tx_hash,
                      record->entry_index};
}

registry::IntegrityVerdict ReviewService::verify(std::string_view uid, std::optional<ByteView> text) const {
    require_enabled();
    if (text) return registry::check_integrity(*registry_, *backend_, *config_.fernet_key, uid, *text, options_.clock);
    return registry::check_integrity_by_digest(*registry_, *backend_, *config_.fernet_key, uid, options_.clock);
}

registry::VerifySummary ReviewService::verify_all() const {
    require_enabled();
    return registry::verify_all(*registry_, *backend_, *config_.fernet_key, options_.clock);
}

chain::TxReceipt ReviewService::transaction(std::string_view tx_hash) const {
    require_enabled();
    const auto hash{chain::TxHash::from_hex(tx_hash)};
    if (!hash) throw Error{ErrorCode::kInvalidInput, "tx hash must be 0x followed by 64 hex digits"};
    auto receipt{backend_->get_receipt(*hash)};
    if (!receipt) throw Error{ErrorCode::kNotFound, "transaction " + std::string{tx_hash} + " not found"};
    return std::move(*receipt);
}

gas::ComparisonReport ReviewService::gas_report(std::span<const uint64_t> sizes) const {
    for (const uint64_t n : sizes) {
        if (n == 0) throw Error{ErrorCode::kInvalidInput, "sizes must be positive integers"};
    }
    if (sizes.empty()) sizes = gas::kReferenceSizes;
    return gas::compare(pricing_.schedule, pricing_.networks, sizes);
}

}  // namespace ledgerseal::api
