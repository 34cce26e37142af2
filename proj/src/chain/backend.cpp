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

#include <ledgerseal/chain/backend.hpp>

#include <ledgerseal/chain/remote_backend.hpp>
#include <ledgerseal/chain/simulated_backend.hpp>
#include <ledgerseal/common/error.hpp>

namespace ledgerseal::chain {

std::string_view to_string(TxStatus status) noexcept {
    switch (status) {
        case TxStatus::kPending: return "pending";
        case TxStatus::kSuccess: return "success";
        case TxStatus::kFailed: return "failed";
    }
    return "unknown";
}

std::shared_ptr<ChainBackend> make_backend(const BackendConfig& config, const WalletKey& deployer,
                                           const std::optional<Address>& contract_address,
                                           const gas::GasSchedule& schedule) {
    switch (config.mode) {
        case BackendMode::kSimulated:
            return std::make_shared<SimulatedBackend>(deployer, config, schedule);
        case BackendMode::kRemoteReceiptOnly:
            if (config.rpc_url.empty()) throw Error{ErrorCode::kConfigError, "remote backend needs an rpc url"};
            return std::make_shared<RemoteReceiptBackend>(config.rpc_url, contract_address.value_or(Address{}));
    }
    throw Error{ErrorCode::kConfigError, "unknown backend mode"};
}

}  // namespace ledgerseal::chain
