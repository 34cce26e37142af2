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

#include <ledgerseal/api/json_views.hpp>

namespace ledgerseal::api {

using nlohmann::ordered_json;

namespace {

ordered_json optional_string(const std::optional<std::string>& value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const SaveResult& result) {
    ordered_json out;
    out["uid"] = result.uid;
    out["tx_hash"] = result.tx_hash;
    out["entry_index"] = result.entry_index;
    out["gas_used"] = result.gas_used;
    return out;
}

ordered_json to_json(const ReviewView& review) {
    ordered_json out;
    out["uid"] = review.uid;
    out["text"] = to_string(review.text);
    out["tx_hash"] = review.tx_hash;
    out["entry_index"] = review.entry_index;
    return out;
}

ordered_json to_json(const registry::IntegrityVerdict& verdict) {
    ordered_json out;
    out["status"] = registry::to_string(verdict.status);
    out["uid"] = verdict.uid;
    out["on_chain_digest"] = optional_string(verdict.on_chain_digest);
    out["local_digest"] = optional_string(verdict.local_digest);
    out["checked_at"] = verdict.checked_at;
    if (!verdict.reason.empty()) out["reason"] = verdict.reason;
    return out;
}

ordered_json to_json(const registry::VerifySummary& summary) {
    ordered_json out;
    out["total"] = summary.total;
    out["verified"] = summary.verified;
    out["mismatched"] = summary.mismatched;
    out["not_found"] = summary.not_found;
    out["unavailable"] = summary.unavailable;
    out["verdicts"] = ordered_json::array();
    for (const auto& verdict : summary.verdicts) out["verdicts"].push_back(to_json(verdict));
    return out;
}

ordered_json to_json(const chain::TxReceipt& receipt) {
    ordered_json out;
    out["tx_hash"] = receipt.tx_hash.to_hex();
    out["status"] = chain::to_string(receipt.status);
    if (receipt.status != chain::TxStatus::kPending) {
        if (receipt.block_number) out["block_number"] = *receipt.block_number;
        if (receipt.gas_used) out["gas_used"] = *receipt.gas_used;
    }
    if (receipt.status == chain::TxStatus::kFailed) out["reason"] = receipt.failure_reason;
    return out;
}

}  // namespace ledgerseal::api
