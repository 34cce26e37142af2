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

#ifndef LEDGERSEAL_CHAIN_REMOTE_BACKEND_HPP_
#define LEDGERSEAL_CHAIN_REMOTE_BACKEND_HPP_

#include <atomic>
#include <chrono>
#include <string>

#include <ledgerseal/chain/backend.hpp>

namespace ledgerseal::chain {

//! Maps an eth_getTransactionReceipt "result" member (JSON text) to a receipt.
//! "null" means the node does not know the hash (or it is still in the mempool)
//! and yields nullopt. Throws Error{kBackendUnavailable} on an unparseable result.
std::optional<TxReceipt> parse_rpc_receipt(const TxHash& hash, std::string_view result_json);

/// Read-only view of an external EVM chain over JSON-RPC 2.0 / HTTP.
///
/// Only get_receipt() is supported; it POSTs
///   {"jsonrpc":"2.0","id":N,"method":"eth_getTransactionReceipt","params":["0x.."]}
/// Everything else throws Error{kBackendUnavailable} since this client
/// neither signs real transactions nor reads contract storage.
class RemoteReceiptBackend final : public ChainBackend {
  public:
    //! url: http://host[:port][/path]. Throws Error{kConfigError} on a malformed url.
    explicit RemoteReceiptBackend(std::string url, Address contract_address = {},
                                  std::chrono::milliseconds timeout = std::chrono::seconds{5});

    [[nodiscard]] std::string_view kind() const noexcept override { return "remote"; }

    TxHash submit(const SignedTransaction& signed_tx) override;
    //! Throws Error{kBackendUnavailable} on transport failure, non-200 status or a JSON-RPC error.
    [[nodiscard]] std::optional<TxReceipt> get_receipt(const TxHash& hash) const override;
    uint64_t seal_block() override;

    [[nodiscard]] ledger::TextEntry get_text(uint64_t index) const override;
    [[nodiscard]] uint64_t total_texts() const override;
    [[nodiscard]] uint64_t next_nonce(const Address& sender) const override;
    [[nodiscard]] Address owner() const override;
    [[nodiscard]] Address contract_address() const override { return contract_address_; }

  private:
    std::string scheme_host_port_;
    std::string path_;
    Address contract_address_;
    std::chrono::milliseconds timeout_;
    mutable std::atomic<uint64_t> next_id_{1};
};

}  // namespace ledgerseal::chain

#endif  // LEDGERSEAL_CHAIN_REMOTE_BACKEND_HPP_
