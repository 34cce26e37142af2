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

#include <ledgerseal/api/config.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include <ledgerseal/common/error.hpp>

extern char** environ;

namespace ledgerseal::api {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error{ErrorCode::kConfigError, what}; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<std::string> get(const EnvMap& env, std::string_view name) {
    const auto it{env.find(name)};
    if (it == env.end() || trim(it->second).empty()) return std::nullopt;
    return std::string{trim(it->second)};
}

bool parse_bool(const std::string& value, std::string_view name) {
    std::string lower{value};
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "1" || lower == "true" || lower == "yes" || lower == "on") return true;
    if (lower == "0" || lower == "false" || lower == "no" || lower == "off") return false;
    config_error(std::string{name} + " must be a boolean, got '" + value + "'");
}

template <typename T>
T parse_number(const std::string& value, std::string_view name) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        config_error(std::string{name} + " is not a valid number: '" + value + "'");
    }
    return out;
}

double parse_double(const std::string& value, std::string_view name) {
    try {
        std::size_t used{0};
        const double out{std::stod(value, &used)};
        if (used != value.size()) throw std::invalid_argument{value};
        return out;
    } catch (const std::logic_error&) {
        config_error(std::string{name} + " is not a valid number: '" + value + "'");
    }
}

}  // namespace

EnvMap load_dotenv(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) config_error("cannot read env file " + path.string());
    EnvMap env;
    std::string raw;
    std::size_t line_no{0};
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{trim(raw)};
        if (line.empty() || line.front() == '#') continue;
        if (line.starts_with("export ")) line = trim(line.substr(7));
        const auto eq{line.find('=')};
        if (eq == std::string_view::npos || eq == 0) {
            config_error(path.string() + ":" + std::to_string(line_no) + ": expected KEY=VALUE");
        }
        const std::string key{trim(line.substr(0, eq))};
        std::string_view value{trim(line.substr(eq + 1))};
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        } else if (const auto hash = value.find(" #"); hash != std::string_view::npos) {
            value = trim(value.substr(0, hash));
        }
        env.insert_or_assign(key, std::string{value});
    }
    return env;
}

EnvMap process_environment() {
    EnvMap env;
    for (char** entry = environ; entry != nullptr && *entry != nullptr; ++entry) {
        const std::string_view kv{*entry};
        if (!kv.starts_with("LEDGERSEAL_")) continue;
        const auto eq{kv.find('=')};
        if (eq == std::string_view::npos) continue;
        env.insert_or_assign(std::string{kv.substr(0, eq)}, std::string{kv.substr(eq + 1)});
    }
    return env;
}

EnvMap merge_env(EnvMap base, const EnvMap& overrides) {
    for (const auto& [k, v] : overrides) base.insert_or_assign(k, v);
    return base;
}

ServiceConfig config_from_env(const EnvMap& env) {
    ServiceConfig config;
    if (const auto v = get(env, kEnvEnabled)) config.enabled = parse_bool(*v, kEnvEnabled);

    if (const auto v = get(env, kEnvBackend)) {
        if (*v == "simulated") {
            config.backend.mode = chain::BackendMode::kSimulated;
        } else if (*v == "remote") {
            config.backend.mode = chain::BackendMode::kRemoteReceiptOnly;
        } else {
            config_error(std::string{kEnvBackend} + " must be 'simulated' or 'remote', got '" + *v + "'");
        }
    }
    if (const auto v = get(env, kEnvRpcUrl)) config.backend.rpc_url = *v;
    if (config.backend.mode == chain::BackendMode::kRemoteReceiptOnly && config.backend.rpc_url.empty()) {
        config_error(std::string{kEnvRpcUrl} + " is required when " + kEnvBackend + "=remote");
    }
    if (const auto v = get(env, kEnvBlockSize)) {
        config.backend.block_size = parse_number<uint64_t>(*v, kEnvBlockSize);
        if (config.backend.block_size == 0) config_error(std::string{kEnvBlockSize} + " must be positive");
    }
    if (const auto v = get(env, kEnvFailureRate)) {
        config.backend.failure_rate = parse_double(*v, kEnvFailureRate);
        if (!(config.backend.failure_rate >= 0.0 && config.backend.failure_rate <= 1.0)) {
            config_error(std::string{kEnvFailureRate} + " must be within [0, 1]");
        }
    }

    if (const auto v = get(env, kEnvFernetKey)) {
        config.fernet_key = crypto::FernetKey::from_base64url(*v);
        if (!config.fernet_key) config_error(std::string{kEnvFernetKey} + " is not a 32-byte base64url key");
    } else if (config.enabled) {
        config_error(std::string{kEnvFernetKey} + " is required");
    }
    if (const auto v = get(env, kEnvPrivateKey)) {
        config.wallet = chain::WalletKey::from_hex(*v);
        if (!config.wallet) config_error(std::string{kEnvPrivateKey} + " is not a 32-byte hex key");
    } else if (config.enabled) {
        config_error(std::string{kEnvPrivateKey} + " is required");
    }
    if (const auto v = get(env, kEnvContractAddress)) {
        config.contract_address = Address::from_hex(*v);
        if (!config.contract_address) config_error(std::string{kEnvContractAddress} + " is not a 20-byte address");
    }
    if (const auto v = get(env, kEnvFingerprintPin)) config.fingerprint_pin = *v;

    if (const auto v = get(env, kEnvRegistryPath)) config.registry_path = *v;
    if (const auto v = get(env, kEnvChainPath)) {
        config.backend.journal_path = *v;
    } else {
        auto journal{config.registry_path};
        journal += ".chain";
        config.backend.journal_path = journal;
    }
    if (const auto v = get(env, kEnvPricingPath)) config.pricing_path = *v;
    if (const auto v = get(env, kEnvHost)) config.host = *v;
    if (const auto v = get(env, kEnvPort)) config.listen_port = parse_number<uint16_t>(*v, kEnvPort);
    return config;
}

}  // namespace ledgerseal::api
