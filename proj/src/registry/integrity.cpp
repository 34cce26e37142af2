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

#include <ledgerseal/registry/integrity.hpp>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>
#include <ledgerseal/crypto/seal.hpp>

namespace ledgerseal::registry {

namespace {

// Resolves uid to the decrypted on-chain plaintext, or fills in a terminal
// verdict and returns nullopt.
std::optional<Bytes> fetch_on_chain(const RegistryRecord* record, const chain::ChainBackend& backend,
                                    const crypto::FernetKey& key, IntegrityVerdict& verdict) {
    if (record == nullptr) {
        verdict.status = VerdictStatus::kNotFound;
        verdict.reason = "uid not in registry";
        return std::nullopt;
    }
    ledger::TextEntry entry;
    try {
        entry = backend.get_text(record->entry_index);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::kIndexOutOfRange) {
            verdict.status = VerdictStatus::kNotFound;
            verdict.reason = "no on-chain entry at index " + std::to_string(record->entry_index);
        } else {
            verdict.status = VerdictStatus::kChainUnavailable;
            verdict.reason = e.what();
        }
        return std::nullopt;
    }
    try {
        Bytes plain{crypto::unseal(entry.text, key)};
        verdict.on_chain_digest = crypto::sha256_hex(plain);
        if (entry.uid != record->uid) {
            verdict.status = VerdictStatus::kMismatch;
            verdict.reason = "on-chain entry belongs to uid '" + entry.uid + "'";
            return std::nullopt;
        }
        return plain;
    } catch (const Error&) {
        verdict.status = VerdictStatus::kMismatch;
        verdict.reason = "decryption_failed";
        return std::nullopt;
    }
}

IntegrityVerdict start_verdict(std::string_view uid, const Clock& clock) {
    IntegrityVerdict verdict;
    verdict.uid = std::string{uid};
    verdict.checked_at = format_rfc3339(clock());
    return verdict;
}

IntegrityVerdict digest_check(const std::optional<RegistryRecord>& record, std::string_view uid,
                              const chain::ChainBackend& backend, const crypto::FernetKey& key, const Clock& clock) {
    IntegrityVerdict verdict{start_verdict(uid, clock)};
    if (record) verdict.local_digest = record->plaintext_digest;
    if (!fetch_on_chain(record ? &*record : nullptr, backend, key, verdict)) return verdict;
    if (*verdict.on_chain_digest == record->plaintext_digest) {
        verdict.status = VerdictStatus::kVerified;
    } else {
        verdict.status = VerdictStatus::kMismatch;
        verdict.reason = "digest differs from registry";
    }
    return verdict;
}

}  // namespace

std::string_view to_string(VerdictStatus status) noexcept {
    switch (status) {
        case VerdictStatus::kVerified: return "verified";
        case VerdictStatus::kMismatch: return "mismatch";
        case VerdictStatus::kNotFound: return "not_found";
        case VerdictStatus::kChainUnavailable: return "chain_unavailable";
    }
    return "unknown";
}

IntegrityVerdict check_integrity(const Registry& registry, const chain::ChainBackend& backend,
                                 const crypto::FernetKey& key, std::string_view uid, ByteView local_text,
                                 const Clock& clock) {
    IntegrityVerdict verdict{start_verdict(uid, clock)};
    verdict.local_digest = crypto::sha256_hex(local_text);
    const auto record{registry.lookup(uid)};
    const auto on_chain{fetch_on_chain(record ? &*record : nullptr, backend, key, verdict)};
    if (!on_chain) return verdict;
    if (on_chain->size() == local_text.size() && std::equal(on_chain->begin(), on_chain->end(), local_text.begin())) {
        verdict.status = VerdictStatus::kVerified;
    } else {
        verdict.status = VerdictStatus::kMismatch;
        verdict.reason = "local text differs from sealed original";
    }
    return verdict;
}

IntegrityVerdict check_integrity_by_digest(const Registry& registry, const chain::ChainBackend& backend,
                                           const crypto::FernetKey& key, std::string_view uid, const Clock& clock) {
    return digest_check(registry.lookup(uid), uid, backend, key, clock);
}

VerifySummary verify_all(const Registry& registry, const chain::ChainBackend& backend, const crypto::FernetKey& key,
                         const Clock& clock) {
    VerifySummary summary;
    for (const auto& record : registry.records()) {
        auto verdict{digest_check(record, record.uid, backend, key, clock)};
        ++summary.total;
        switch (verdict.status) {
            case VerdictStatus::kVerified: ++summary.verified; break;
            case VerdictStatus::kMismatch: ++summary.mismatched; break;
            case VerdictStatus::kNotFound: ++summary.not_found; break;
            case VerdictStatus::kChainUnavailable: ++summary.unavailable; break;
        }
        summary.verdicts.push_back(std::move(verdict));
    }
    return summary;
}

}  // namespace ledgerseal::registry
