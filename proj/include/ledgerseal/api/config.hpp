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

#ifndef LEDGERSEAL_API_CONFIG_HPP_
#define LEDGERSEAL_API_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <ledgerseal/chain/backend.hpp>
#include <ledgerseal/crypto/fernet.hpp>

namespace ledgerseal::api {

using EnvMap = std::map<std::string, std::string, std::less<>>;

// Recognized variables. The first nine are the public contract; the rest tune
// the simulator and startup checks.
inline constexpr char kEnvEnabled[]{"LEDGERSEAL_ENABLED"};
inline constexpr char kEnvBackend[]{"LEDGERSEAL_BACKEND"};
inline constexpr char kEnvPrivateKey[]{"LEDGERSEAL_PRIVATE_KEY"};
inline constexpr char kEnvContractAddress[]{"LEDGERSEAL_CONTRACT_ADDRESS"};
inline constexpr char kEnvFernetKey[]{"LEDGERSEAL_FERNET_KEY"};
inline constexpr char kEnvRpcUrl[]{"LEDGERSEAL_RPC_URL"};
inline constexpr char kEnvRegistryPath[]{"LEDGERSEAL_REGISTRY_PATH"};
inline constexpr char kEnvPort[]{"LEDGERSEAL_PORT"};
inline constexpr char kEnvPricingPath[]{"LEDGERSEAL_PRICING_PATH"};
inline constexpr char kEnvChainPath[]{"LEDGERSEAL_CHAIN_PATH"};
inline constexpr char kEnvBlockSize[]{"LEDGERSEAL_BLOCK_SIZE"};
inline constexpr char kEnvFailureRate[]{"LEDGERSEAL_FAILURE_RATE"};
inline constexpr char kEnvFingerprintPin[]{"LEDGERSEAL_FINGERPRINT_PIN"};
inline constexpr char kEnvHost[]{"LEDGERSEAL_HOST"};

struct ServiceConfig {
    bool enabled{true};
    chain::BackendConfig backend;
    std::optional<crypto::FernetKey> fernet_key;  // required when enabled
    std::optional<chain::WalletKey> wallet;       // required when enabled
    std::optional<Address> contract_address;
    std::optional<std::string> fingerprint_pin;
    std::filesystem::path registry_path{"ledgerseal-registry.jsonl"};
    std::optional<std::filesystem::path> pricing_path;
    std::string host{"127.0.0.1"};
    uint16_t listen_port{8080};
};

//! Parses dotenv-style KEY=VALUE lines: blank lines and '#' comments are
//! skipped, an "export " prefix is allowed, values may be single- or
//! double-quoted. Throws Error{kConfigError} if the file cannot be read or a
//! line is malformed.
EnvMap load_dotenv(const std::filesystem::path& path);

//! Every LEDGERSEAL_* variable of the current process.
EnvMap process_environment();

//! Values in overrides win over base (the process environment beats the .env file).
EnvMap merge_env(EnvMap base, const EnvMap& overrides);

//! Throws Error{kConfigError} whose message names the offending variable.
//! When no chain path is configured the simulator journals next to the
//! registry (<registry_path>.chain).
ServiceConfig config_from_env(const EnvMap& env);

}  // namespace ledgerseal::api

#endif  // LEDGERSEAL_API_CONFIG_HPP_
