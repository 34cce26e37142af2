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

#include <ledgerseal/api/http_server.hpp>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <ledgerseal/api/json_views.hpp>

namespace ledgerseal::api {

using nlohmann::json;

namespace {

constexpr char kJson[]{"application/json"};

template <typename Json>
void reply(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(-1, ' ', false, Json::error_handler_t::replace), kJson);
}

void reply_error(httplib::Response& res, int status, std::string_view code, const std::string& message) {
    reply(res, status, json{{"error", {{"code", code}, {"message", message}}}});
}

// Runs handler, translating library errors into the error envelope.
template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
    try {
        handler();
    } catch (const Error& e) {
        const auto mapped{map_error(e.code())};
        if (mapped.status >= 500) spdlog::warn("request failed: {} ({})", e.what(), to_string(e.code()));
        reply_error(res, mapped.status, mapped.code, e.what());
    } catch (const std::exception& e) {
        spdlog::error("unhandled error: {}", e.what());
        reply_error(res, 500, "internal", e.what());
    }
}

json parse_body(const httplib::Request& req) {
    try {
        return json::parse(req.body);
    } catch (const json::exception& e) {
        throw Error{ErrorCode::kInvalidInput, std::string{"malformed JSON body: "} + e.what()};
    }
}

std::string string_field(const json& body, const char* name) {
    const auto it{body.find(name)};
    if (it == body.end() || !it->is_string()) {
        throw Error{ErrorCode::kInvalidInput, std::string{"field '"} + name + "' must be a string"};
    }
    return it->get<std::string>();
}

}  // namespace

HttpError map_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidInput: return {400, "invalid_input"};
        case ErrorCode::kUnauthorized: return {403, "unauthorized"};
        case ErrorCode::kNotFound:
        case ErrorCode::kIndexOutOfRange: return {404, "not_found"};
        case ErrorCode::kDuplicateUid: return {409, "duplicate_uid"};
        case ErrorCode::kServiceDisabled: return {503, "service_disabled"};
        case ErrorCode::kBackendUnavailable: return {502, "chain_unavailable"};
        case ErrorCode::kTxFailed:
        case ErrorCode::kNonceMismatch:
        case ErrorCode::kInvalidSignature:
        case ErrorCode::kDuplicateTransaction:
        case ErrorCode::kSenderKeyMismatch: return {502, "tx_failed"};
        case ErrorCode::kAuthenticationFailed:
        case ErrorCode::kMalformedToken:
        case ErrorCode::kCorruptStream: return {500, "decryption_failed"};
        case ErrorCode::kStorageFailure: return {500, "storage_failure"};
        case ErrorCode::kConfigError:
        case ErrorCode::kEntropyUnavailable: return {500, "internal"};
    }
    return {500, "internal"};
}

HttpServer::HttpServer(std::shared_ptr<ReviewService> service)
    : service_{std::move(service)}, server_{std::make_unique<httplib::Server>()} {
    register_routes();
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::register_routes() {
    auto& svc{*service_};

    server_->Post("/api/v1/reviews", [&svc](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            if (!svc.enabled()) throw Error{ErrorCode::kServiceDisabled, "blockchain integration is disabled"};
            const json body = parse_body(req);
            if (!body.is_object()) throw Error{ErrorCode::kInvalidInput, "body must be a JSON object"};
            const std::string uid{string_field(body, "uid")};
            const std::string text{string_field(body, "text")};
            reply(res, 201, to_json(svc.save_review(uid, as_bytes(text))));
        });
    });

    server_->Get("/api/v1/reviews/:uid", [&svc](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, to_json(svc.get_review(req.path_params.at("uid")))); });
    });

    server_->Post("/api/v1/reviews/:uid/verify", [&svc](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            std::optional<std::string> text;
            if (!req.body.empty()) {
                const json body = parse_body(req);
                if (!body.is_object()) throw Error{ErrorCode::kInvalidInput, "body must be a JSON object"};
                if (body.contains("text")) text = string_field(body, "text");
            }
            const auto verdict{text ? svc.verify(req.path_params.at("uid"), as_bytes(*text))
                                    : svc.verify(req.path_params.at("uid"), std::nullopt)};
            reply(res, 200, to_json(verdict));
        });
    });

    server_->Get("/api/v1/transactions/:tx_hash", [&svc](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, to_json(svc.transaction(req.path_params.at("tx_hash")))); });
    });

    server_->Get("/api/v1/gas/report", [&svc](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            std::vector<uint64_t> sizes;
            if (req.has_param("sizes")) {
                sizes = gas::parse_size_list(req.get_param_value("sizes"));
                if (sizes.empty()) throw Error{ErrorCode::kInvalidInput, "sizes must not be empty"};
            }
            res.status = 200;
            res.set_content(svc.gas_report(sizes).to_json(), kJson);
        });
    });

    server_->Get("/healthz", [&svc](const httplib::Request&, httplib::Response& res) {
        reply(res, 200, json{{"status", "ok"}, {"enabled", svc.enabled()}, {"backend", svc.backend_kind()}});
    });

    server_->set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            const std::string_view code{res.status == 404 ? "not_found" : "invalid_input"};
            reply_error(res, res.status, code, httplib::status_message(res.status));
        }
    });
}

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        port_ = server_->bind_to_any_port(host);
    } else {
        port_ = server_->bind_to_port(host, port) ? port : -1;
    }
    if (port_ <= 0) {
        throw Error{ErrorCode::kConfigError, "cannot bind " + host + ":" + std::to_string(port)};
    }
    return port_;
}

void HttpServer::run() { server_->listen_after_bind(); }

void HttpServer::start() {
    thread_ = std::thread{[this] { run(); }};
    server_->wait_until_ready();
}

void HttpServer::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

}  // namespace ledgerseal::api
