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

#ifndef LEDGERSEAL_REGISTRY_INTEGRITY_HPP_
#define LEDGERSEAL_REGISTRY_INTEGRITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <ledgerseal/chain/backend.hpp>
#include <ledgerseal/common/clock.hpp>
#include <ledgerseal/crypto/fernet.hpp>
#include <ledgerseal/registry/registry.hpp>

namespace ledgerseal::registry {

enum class VerdictStatus { kVerified, kMismatch, kNotFound, kChainUnavailable };

//! "verified", "mismatch", "not_found", "chain_unavailable"
std::string_view to_string(VerdictStatus status) noexcept;

/// Outcome of comparing local data with the sealed on-chain original.
///
/// Verified: both digests present and equal. Mismatch: both present and
/// unequal, or the on-chain token failed to decrypt (reason
/// "decryption_failed", on_chain_digest absent) which by itself proves the
/// record diverged from what was sealed.
struct IntegrityVerdict {
    VerdictStatus status{VerdictStatus::kNotFound};
    std::string uid;
    std::optional<std::string> on_chain_digest;
    std::optional<std::string> local_digest;
    std::string reason;  // empty for Verified
    std::string checked_at;
};

//! Decrypt-then-compare against caller-held plaintext, byte for byte.
//! Never throws for chain, registry or crypto outcomes; they become verdicts.
IntegrityVerdict check_integrity(const Registry& registry, const chain::ChainBackend& backend,
                                 const crypto::FernetKey& key, std::string_view uid, ByteView local_text,
                                 const Clock& clock = system_clock());

//! Same flow, but compares against the plaintext digest the registry stored at save time.
IntegrityVerdict check_integrity_by_digest(const Registry& registry, const chain::ChainBackend& backend,
                                           const crypto::FernetKey& key, std::string_view uid,
                                           const Clock& clock = system_clock());

struct VerifySummary {
    std::size_t total{0};
    std::size_t verified{0};
    std::size_t mismatched{0};
    std::size_t not_found{0};
    std::size_t unavailable{0};
    std::vector<IntegrityVerdict> verdicts;

    //! No mismatches and nothing missing.
    [[nodiscard]] bool clean() const noexcept { return mismatched == 0 && not_found == 0; }
};

//! Digest-mode check of every record in a snapshot taken at call time.
VerifySummary verify_all(const Registry& registry, const chain::ChainBackend& backend, const crypto::FernetKey& key,
                         const Clock& clock = system_clock());

}  // namespace ledgerseal::registry

#endif  // LEDGERSEAL_REGISTRY_INTEGRITY_HPP_
