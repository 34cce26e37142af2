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


#include <ledgerseal/cli/cli.hpp>

#include <csignal>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>
#include <pthread.h>

#include <ledgerseal/api/http_server.hpp>
#include <ledgerseal/api/json_views.hpp>
#include <ledgerseal/api/service.hpp>
#include <ledgerseal/chain/simulated_backend.hpp>
#include <ledgerseal/common/error.hpp>

namespace ledgerseal::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string env_file;
    std::string registry;
    std::string chain;
    std::string pricing;
    std::string server;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    const api::EnvMap& env;
    CommonOptions common;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kDuplicateUid:
        case ErrorCode::kNotFound:
        case ErrorCode::kIndexOutOfRange: return kExitVerdict;
        case ErrorCode::kInvalidInput: return kExitUsage;
        default: return kExitRuntime;
    }
}

int exit_code_for(registry::VerdictStatus status) {
    switch (status) {
        case registry::VerdictStatus::kVerified: return kExitOk;
        case registry::VerdictStatus::kMismatch:
        case registry::VerdictStatus::kNotFound: return kExitVerdict;
        case registry::VerdictStatus::kChainUnavailable: return kExitRuntime;
    }
    return kExitRuntime;
}

template <typename Json>
void emit(std::ostream& out, const Json& doc) {
    out << doc.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
}

api::EnvMap effective_env(const Context& ctx) {
    api::EnvMap env{ctx.env};
    if (!ctx.common.env_file.empty()) env = api::merge_env(api::load_dotenv(ctx.common.env_file), ctx.env);
    if (!ctx.common.registry.empty()) env[api::kEnvRegistryPath] = ctx.common.registry;
    if (!ctx.common.chain.empty()) env[api::kEnvChainPath] = ctx.common.chain;
    if (!ctx.common.pricing.empty()) env[api::kEnvPricingPath] = ctx.common.pricing;
    return env;
}

api::ServiceConfig load_config(const Context& ctx) { return api::config_from_env(effective_env(ctx)); }

Bytes read_file(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw UsageError{"cannot read " + path};
    return Bytes{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

std::optional<Bytes> text_argument(const std::string& text, const std::string& file, bool text_given) {
    if (text_given && !file.empty()) throw UsageError{"--text and --file are mutually exclusive"};
    if (text_given) return to_bytes(text);
    if (!file.empty()) return read_file(file);
    return std::nullopt;
}

// Remote mode: forwards to a running server and relays its JSON body.
class RemoteClient {
  public:
    explicit RemoteClient(const std::string& url) : client_{url} {
        client_.set_connection_timeout(5);
        client_.set_read_timeout(60);
    }

    //! Prints the body and returns the HTTP status. Throws on transport failure.
    int request(const std::string& method, const std::string& path, const std::optional<json>& body,
                std::ostream& out) {
        httplib::Result res{method == "GET" ? client_.Get(path)
                                            : client_.Post(path, body ? body->dump() : std::string{},
                                                           "application/json")};
        if (!res) {
            throw Error{ErrorCode::kBackendUnavailable, "server unreachable: " + httplib::to_string(res.error())};
        }
        out << res->body;
        if (res->body.empty() || res->body.back() != '\n') out << '\n';
        last_body_ = res->body;
        return res->status;
    }

    [[nodiscard]] std::string error_code() const {
        const json doc = json::parse(last_body_, nullptr, /*allow_exceptions=*/false);
        if (doc.is_object() && doc.contains("error") && doc["error"].contains("code")) {
            return doc["error"]["code"].get<std::string>();
        }
        return {};
    }

    [[nodiscard]] std::string status_field() const {
        const json doc = json::parse(last_body_, nullptr, /*allow_exceptions=*/false);
        return doc.is_object() && doc.contains("status") ? doc["status"].get<std::string>() : std::string{};
    }

  private:
    httplib::Client client_;
    std::string last_body_;
};

int remote_exit(const RemoteClient& client, int status) {
    if (status >= 200 && status < 300) return kExitOk;
    const std::string code{client.error_code()};
    if (code == "duplicate_uid" || code == "not_found") return kExitVerdict;
    if (code == "invalid_input") return kExitUsage;
    return kExitRuntime;
}

std::string encode_path_segment(const std::string& segment) { return httplib::detail::encode_url(segment); }

int cmd_serve(const Context& ctx, std::optional<int> port) {
    auto config{load_config(ctx)};
    if (port) config.listen_port = static_cast<uint16_t>(*port);

    // Block termination signals before any server thread exists so that only
    // sigwait below observes them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    auto service{std::make_shared<api::ReviewService>(config)};
    api::HttpServer server{service};
    const int bound{server.bind(config.host, config.listen_port)};
    server.start();
    ordered_json ready;
    ready["listening"] = "http://" + config.host + ":" + std::to_string(bound);
    ready["enabled"] = service->enabled();
    ready["backend"] = service->backend_kind();
    emit(ctx.out, ready);
    ctx.out.flush();
    ctx.err << "ledgerseal listening on " << config.host << ':' << bound << '\n';

    int received{0};
    sigwait(&signals, &received);
    ctx.err << "signal " << received << ", shutting down\n";
    server.stop();
    return kExitOk;
}

int cmd_keygen(const Context& ctx) {
    const auto fernet{crypto::FernetKey::generate()};
    const auto wallet{chain::WalletKey::generate()};
    ordered_json doc;
    doc["fernet_key"] = fernet.to_base64url();
    doc["private_key"] = wallet.to_hex();
    doc["address"] = wallet.address().to_hex();
    doc["contract_address"] = chain::simulated_contract_address(wallet.address()).to_hex();
    emit(ctx.out, doc);
    ctx.err << api::kEnvFernetKey << '=' << fernet.to_base64url() << '\n'
            << api::kEnvPrivateKey << '=' << wallet.to_hex() << '\n';
    return kExitOk;
}

int cmd_save(const Context& ctx, const std::string& uid, const Bytes& text) {
    if (!ctx.common.server.empty()) {
        RemoteClient client{ctx.common.server};
        const json body{{"uid", uid}, {"text", to_string(text)}};
        return remote_exit(client, client.request("POST", "/api/v1/reviews", body, ctx.out));
    }
    api::ReviewService service{load_config(ctx)};
    emit(ctx.out, api::to_json(service.save_review(uid, text)));
    return kExitOk;
}

int cmd_get(const Context& ctx, const std::string& uid) {
    if (!ctx.common.server.empty()) {
        RemoteClient client{ctx.common.server};
        return remote_exit(client, client.request("GET", "/api/v1/reviews/" + encode_path_segment(uid),
                                                  std::nullopt, ctx.out));
    }
    const api::ReviewService service{load_config(ctx)};
    emit(ctx.out, api::to_json(service.get_review(uid)));
    return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& uid, const std::optional<Bytes>& text) {
    if (!ctx.common.server.empty()) {
        RemoteClient client{ctx.common.server};
        std::optional<json> body;
        if (text) body = json{{"text", to_string(*text)}};
        const int status{client.request("POST", "/api/v1/reviews/" + encode_path_segment(uid) + "/verify", body,
                                        ctx.out)};
        if (status != 200) return remote_exit(client, status);
        const std::string verdict{client.status_field()};
        if (verdict == "verified") return kExitOk;
        if (verdict == "chain_unavailable") return kExitRuntime;
        return kExitVerdict;
    }
    const api::ReviewService service{load_config(ctx)};
    const auto verdict{text ? service.verify(uid, ByteView{*text}) : service.verify(uid, std::nullopt)};
    emit(ctx.out, api::to_json(verdict));
    return exit_code_for(verdict.status);
}

int cmd_verify_all(const Context& ctx) {
    const api::ReviewService service{load_config(ctx)};
    const auto summary{service.verify_all()};
    emit(ctx.out, api::to_json(summary));
    ctx.err << fmt::format("{} records: {} verified, {} mismatched, {} not found, {} unavailable\n", summary.total,
                           summary.verified, summary.mismatched, summary.not_found, summary.unavailable);
    if (summary.mismatched > 0 || summary.not_found > 0) return kExitVerdict;
    if (summary.unavailable > 0) return kExitRuntime;
    return kExitOk;
}

int cmd_gas_report(const Context& ctx, const std::string& sizes_text, bool sizes_given, const std::string& format,
                   const std::string& output) {
    std::vector<uint64_t> sizes;
    try {
        sizes = gas::parse_size_list(sizes_text);
    } catch (const Error& e) {
        throw UsageError{e.what()};
    }
    if (sizes_given && sizes.empty()) throw UsageError{"--sizes must not be empty"};
    if (sizes.empty()) sizes.assign(std::begin(gas::kReferenceSizes), std::end(gas::kReferenceSizes));

    const auto env{effective_env(ctx)};
    const auto pricing_path{env.find(api::kEnvPricingPath)};
    const auto pricing{pricing_path != env.end() && !pricing_path->second.empty()
                           ? gas::PricingConfig::load(pricing_path->second)
                           : gas::PricingConfig::defaults()};
    const auto report{gas::compare(pricing.schedule, pricing.networks, sizes)};
    const std::string text{format == "json" ? report.to_json() + "\n" : report.to_csv()};

    if (output.empty()) {
        ctx.out << text;
    } else {
        std::ofstream file{output, std::ios::binary | std::ios::trunc};
        if (!(file << text)) throw Error{ErrorCode::kStorageFailure, "cannot write " + output};
        ctx.err << "wrote " << output << '\n';
    }
    return kExitOk;
}

int cmd_tamper_demo(const Context& ctx, const std::string& uid, bool confirmed) {
    if (!confirmed) throw UsageError{"tamper-demo rewrites the registry; pass --yes to proceed"};
    const auto config{load_config(ctx)};

    std::optional<registry::IntegrityVerdict> before;
    std::string digest;
    {
        const api::ReviewService service{config};
        if (!service.enabled()) throw Error{ErrorCode::kServiceDisabled, "blockchain integration is disabled"};
        const auto record{service.registry()->lookup(uid)};
        if (!record) throw UsageError{"uid '" + uid + "' is not in the registry"};
        digest = record->plaintext_digest;
        before = service.verify(uid, std::nullopt);
    }

    digest.back() = digest.back() == '0' ? '1' : '0';
    if (!registry::overwrite_digest(config.registry_path, uid, digest)) {
        throw Error{ErrorCode::kStorageFailure, "uid vanished from the registry"};
    }

    const api::ReviewService service{config};
    const auto after{service.verify(uid, std::nullopt)};
    ordered_json doc;
    doc["uid"] = uid;
    doc["before"] = api::to_json(*before);
    doc["after"] = api::to_json(after);
    emit(ctx.out, doc);
    ctx.err << "before: " << registry::to_string(before->status) << ", after: " << registry::to_string(after.status)
            << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const api::EnvMap& env) {
    CLI::App app{"Encrypted review storage on an append-only ledger", "ledgerseal"};
    app.require_subcommand(1);
    Context ctx{out, err, env, {}};

    auto add_common = [&ctx](CLI::App* cmd, bool with_server) {
        cmd->add_option("--env-file", ctx.common.env_file, "dotenv file with LEDGERSEAL_* settings");
        cmd->add_option("--registry", ctx.common.registry, "registry path (overrides LEDGERSEAL_REGISTRY_PATH)");
        cmd->add_option("--chain", ctx.common.chain, "simulator journal (overrides LEDGERSEAL_CHAIN_PATH)");
        if (with_server) cmd->add_option("--server", ctx.common.server, "talk to a running server, e.g. http://host:8080");
    };

    std::optional<int> port;
    auto* serve{app.add_subcommand("serve", "run the HTTP API until SIGINT/SIGTERM")};
    add_common(serve, false);
    serve->add_option("--pricing", ctx.common.pricing, "pricing config JSON");
    serve->add_option("--port", port, "listen port (0 picks a free one)")->check(CLI::Range(0, 65535));

    auto* keygen{app.add_subcommand("keygen", "print a fresh Fernet key and wallet key")};

    std::string uid;
    std::string text;
    std::string file;
    auto* save{app.add_subcommand("save", "encrypt and store a review")};
    add_common(save, true);
    save->add_option("--uid", uid, "review identifier")->required();
    auto* save_text{save->add_option("--text", text, "review text")};
    save->add_option("--file", file, "read the review from a file");

    auto* get{app.add_subcommand("get", "fetch and decrypt a review")};
    add_common(get, true);
    get->add_option("--uid", uid, "review identifier")->required();

    auto* verify{app.add_subcommand("verify", "check one review against the registry")};
    add_common(verify, true);
    verify->add_option("--uid", uid, "review identifier")->required();
    auto* verify_text{verify->add_option("--text", text, "compare against this text instead of the digest")};
    verify->add_option("--file", file, "compare against a file's contents");

    auto* verify_all{app.add_subcommand("verify-all", "check every registry record; exit 1 on any failure")};
    add_common(verify_all, false);

    std::string sizes;
    std::string format{"csv"};
    std::string output;
    auto* gas_report{app.add_subcommand("gas-report", "compare storage cost across networks")};
    add_common(gas_report, false);
    auto* sizes_opt{gas_report->add_option("--sizes", sizes, "comma-separated byte counts")};
    gas_report->add_option("--pricing", ctx.common.pricing, "pricing config JSON");
    gas_report->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    gas_report->add_option("--output,-o", output, "write to a file instead of stdout");

    bool confirmed{false};
    auto* tamper{app.add_subcommand("tamper-demo", "corrupt one registry digest and show the verdict flip")};
    add_common(tamper, false);
    tamper->add_option("--uid", uid, "review identifier")->required();
    tamper->add_flag("--yes", confirmed, "confirm the destructive rewrite");

    std::vector<std::string> reversed{args.rbegin(), args.rend()};
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code{app.exit(e, out, err)};
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (serve->parsed()) return cmd_serve(ctx, port);
        if (keygen->parsed()) return cmd_keygen(ctx);
        if (save->parsed()) {
            const auto body{text_argument(text, file, save_text->count() > 0)};
            if (!body) throw UsageError{"save needs --text or --file"};
            return cmd_save(ctx, uid, *body);
        }
        if (get->parsed()) return cmd_get(ctx, uid);
        if (verify->parsed()) return cmd_verify(ctx, uid, text_argument(text, file, verify_text->count() > 0));
        if (verify_all->parsed()) return cmd_verify_all(ctx);
        if (gas_report->parsed()) return cmd_gas_report(ctx, sizes, sizes_opt->count() > 0, format, output);
        if (tamper->parsed()) return cmd_tamper_demo(ctx, uid, confirmed);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << " (" << to_string(e.code()) << ")\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace ledgerseal::cli
