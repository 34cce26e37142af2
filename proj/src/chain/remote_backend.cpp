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

#include <ledgerseal/chain/remote_backend.hpp>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal::chain {

using nlohmann::json;

namespace {

[[noreturn]] void unavailable(const std::string& what) { throw Error{ErrorCode::kBackendUnavailable, what}; }

[[noreturn]] void receipt_only(std::string_view op) {
    unavailable("remote backend is receipt-only; " + std::string{op} + " is not supported");
}

uint64_t parse_quantity(const json& value, std::string_view field) {
    if (!value.is_string()) unavailable("receipt field '" + std::string{field} + "' is not a hex quantity");
    const auto& text{value.get_ref<const std::string&>()};
    if (!text.starts_with("0x") || text.size() < 3 || text.size() > 18) {
        unavailable("receipt field '" + std::string{field} + "' is not a hex quantity");
    }
    uint64_t out{0};
    for (std::size_t i = 2; i < text.size(); ++i) {
        const char c{text[i]};
        int digit{-1};
        if (c >= '0' && c <= '9') digit = c - '0';
        if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        if (digit < 0) unavailable("receipt field '" + std::string{field} + "' is not a hex quantity");
        out = (out << 4) | static_cast<uint64_t>(digit);
    }
    return out;
}

}  // namespace

std::optional<TxReceipt> parse_rpc_receipt(const TxHash& hash, std::string_view result_json) {
    json result;
    try {
        result = json::parse(result_json);
    } catch (const json::exception& e) {
        unavailable(std::string{"unparseable receipt: "} + e.what());
    }
    if (result.is_null()) return std::nullopt;
    if (!result.is_object()) unavailable("receipt result is not an object");

    TxReceipt receipt{hash, TxStatus::kPending, {}, {}, {}, {}};
    const auto block{result.find("blockNumber")};
    if (block == result.end() || block->is_null()) return receipt;
    receipt.block_number = parse_quantity(*block, "blockNumber");
    if (const auto gas = result.find("gasUsed"); gas != result.end() && !gas->is_null()) {
        receipt.gas_used = parse_quantity(*gas, "gasUsed");
    }
    const auto status{result.find("status")};
    if (status == result.end() || status->is_null()) {
        // pre-Byzantium receipts carry no status; inclusion is all we know
        receipt.status = TxStatus::kSuccess;
    } else if (parse_quantity(*status, "status") == 1) {
        receipt.status = TxStatus::kSuccess;
    } else {
        receipt.status = TxStatus::kFailed;
        receipt.failure_reason = "reverted";
    }
    return receipt;
}

RemoteReceiptBackend::RemoteReceiptBackend(std::string url, Address contract_address,
                                           std::chrono::milliseconds timeout)
    : contract_address_{contract_address}, timeout_{timeout} {
    const auto scheme_end{url.find("://")};
    // Built without TLS; put an HTTPS endpoint behind a local proxy.
    if (scheme_end == std::string::npos || !url.starts_with("http://")) {
        throw Error{ErrorCode::kConfigError, "rpc url must start with http://: " + url};
    }
    const auto path_start{url.find('/', scheme_end + 3)};
    scheme_host_port_ = url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
    if (scheme_host_port_.size() <= scheme_end + 3) throw Error{ErrorCode::kConfigError, "rpc url has no host"};
}

TxHash RemoteReceiptBackend::submit(const SignedTransaction&) { receipt_only("submit"); }

uint64_t RemoteReceiptBackend::seal_block() { receipt_only("seal_block"); }

ledger::TextEntry RemoteReceiptBackend::get_text(uint64_t) const { receipt_only("get_text"); }

uint64_t RemoteReceiptBackend::total_texts() const { receipt_only("total_texts"); }

uint64_t RemoteReceiptBackend::next_nonce(const Address&) const { receipt_only("next_nonce"); }

Address RemoteReceiptBackend::owner() const { receipt_only("owner"); }

std::optional<TxReceipt> RemoteReceiptBackend::get_receipt(const TxHash& hash) const {
    const json request{{"jsonrpc", "2.0"},
                       {"id", next_id_.fetch_add(1)},
                       {"method", "eth_getTransactionReceipt"},
                       {"params", json::array({hash.to_hex()})}};
    const std::string body{request.dump()};
    spdlog::debug("rpc request {}: {}", scheme_host_port_ + path_, body);

    httplib::Client client{scheme_host_port_};
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    const auto response{client.Post(path_, body, "application/json")};
    if (!response) unavailable("rpc transport failure: " + httplib::to_string(response.error()));
    spdlog::debug("rpc response {}: {}", response->status, response->body);
    if (response->status != 200) unavailable("rpc endpoint answered HTTP " + std::to_string(response->status));

    json reply;
    try {
        reply = json::parse(response->body);
    } catch (const json::exception& e) {
        unavailable(std::string{"rpc response is not JSON: "} + e.what());
    }
    if (const auto err = reply.find("error"); err != reply.end() && !err->is_null()) {
        unavailable("rpc error: " + err->dump());
    }
    const auto result{reply.find("result")};
    if (result == reply.end()) unavailable("rpc response has no result");
    return parse_rpc_receipt(hash, result->dump());
}

}  // namespace ledgerseal::chain
