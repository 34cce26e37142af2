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

#ifndef LEDGERSEAL_API_JSON_VIEWS_HPP_
#define LEDGERSEAL_API_JSON_VIEWS_HPP_

// Wire shapes shared by the HTTP API and the CLI's stdout.

#include <json.hpp>

#include <ledgerseal/api/service.hpp>

namespace ledgerseal::api {

//! {"uid","tx_hash","entry_index","gas_used"}
nlohmann::ordered_json to_json(const SaveResult& result);

//! {"uid","text","tx_hash","entry_index"}; non-UTF-8 bytes are replaced on dump.
nlohmann::ordered_json to_json(const ReviewView& review);

//! {"status","uid","on_chain_digest","local_digest","checked_at"} plus "reason" when set.
nlohmann::ordered_json to_json(const registry::IntegrityVerdict& verdict);

//! {"total","verified","mismatched","not_found","unavailable","verdicts":[...]}
nlohmann::ordered_json to_json(const registry::VerifySummary& summary);

//! {"tx_hash","status"} plus "block_number"/"gas_used" once final, "reason" when failed.
nlohmann::ordered_json to_json(const chain::TxReceipt& receipt);

}  // namespace ledgerseal::api

#endif  // LEDGERSEAL_API_JSON_VIEWS_HPP_
