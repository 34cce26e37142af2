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

#ifndef LEDGERSEAL_API_SERVICE_HPP_
#define LEDGERSEAL_API_SERVICE_HPP_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <ledgerseal/api/config.hpp>
#include <ledgerseal/chain/backend.hpp>
#include <ledgerseal/common/clock.hpp>
#include <ledgerseal/crypto/fernet.hpp>
#include <ledgerseal/gas/gas_model.hpp>
#include <ledgerseal/registry/integrity.hpp>
#include <ledgerseal/registry/registry.hpp>

namespace ledgerseal::api {

//! Clock drives both token timestamps and registry timestamps; iv_source
//! supplies Fernet IVs. Pinning both makes every output byte reproducible.
struct ServiceOptions {
    Clock clock{system_clock()};
    std::function<crypto::Iv()> iv_source;  // empty: CSPRNG
};

struct SaveResult {
    std::string uid;
    std::string tx_hash;
    uint64_t entry_index{0};
    uint64_t gas_used{0};
};

struct ReviewView {
    std::string uid;
    Bytes text;
    std::string tx_hash;
    uint64_t entry_index{0};
};

//! SHA-256(contract address || owner address), hex.
std::string contract_fingerprint(const Address& contract, const Address& owner);

/// Save / retrieve / verify pipeline shared by the HTTP API and the CLI.
///
/// When the config is disabled no backend, registry or key material is
/// touched and every chain-facing call throws Error{kServiceDisabled}.
class ReviewService {
  public:
    //! Builds the backend and opens the registry from config.
    //! Throws Error{kConfigError} (including a fingerprint pin mismatch) or Error{kStorageFailure}.
    explicit ReviewService(ServiceConfig config, ServiceOptions options = {});

    //! Uses an externally owned backend (tests, fault injection).
    ReviewService(ServiceConfig config, std::shared_ptr<chain::ChainBackend> backend, ServiceOptions options = {});

    ReviewService(const ReviewService&) = delete;
    ReviewService& operator=(const ReviewService&) = delete;

    /// seal -> build/sign/submit -> seal block -> receipt -> registry append.
    /// Returns only after the registry record is durable.
    /// Throws Error{kInvalidInput}, Error{kDuplicateUid}, Error{kTxFailed} (Failed
    /// receipt, nothing recorded) or Error{kBackendUnavailable}.
    SaveResult save_review(std::string_view uid, ByteView text);

    //! Throws Error{kNotFound}, Error{kBackendUnavailable}, or a crypto error when
    //! the on-chain token no longer decrypts.
    ReviewView get_review(std::string_view uid) const;

    //! With text: byte comparison. Without: digest comparison.
    registry::IntegrityVerdict verify(std::string_view uid, std::optional<ByteView> text) const;
    registry::VerifySummary verify_all() const;

    //! Throws Error{kInvalidInput} for a malformed hash, Error{kNotFound} for an unknown one.
    chain::TxReceipt transaction(std::string_view tx_hash) const;

    //! Empty sizes means the reference set. Throws Error{kInvalidInput} for a zero size.
    gas::ComparisonReport gas_report(std::span<const uint64_t> sizes) const;

    [[nodiscard]] bool enabled() const noexcept { return config_.enabled; }
    //! "simulated" or "remote", from configuration alone.
    [[nodiscard]] std::string_view backend_kind() const noexcept;
    [[nodiscard]] const ServiceConfig& config() const noexcept { return config_; }
    [[nodiscard]] const gas::PricingConfig& pricing() const noexcept { return pricing_; }
    [[nodiscard]] const std::string& fingerprint() const noexcept { return fingerprint_; }

    [[nodiscard]] std::shared_ptr<chain::ChainBackend> backend() const noexcept { return backend_; }
    [[nodiscard]] registry::Registry* registry() const noexcept { return registry_.get(); }

  private:
    void init();
    void require_enabled() const;
    crypto::Iv next_iv() const;

    ServiceConfig config_;
    ServiceOptions options_;
    gas::PricingConfig pricing_;
    std::shared_ptr<chain::ChainBackend> backend_;
    std::unique_ptr<registry::Registry> registry_;
    std::string fingerprint_;
    std::mutex write_mutex_;
};

}  // namespace ledgerseal::api

#endif  // LEDGERSEAL_API_SERVICE_HPP_
