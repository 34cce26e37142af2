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


#include <fstream>

#include <gtest/gtest.h>

#include <ledgerseal/api/config.hpp>
#include <ledgerseal/common/error.hpp>

#include "support/test_support.hpp"

namespace ledgerseal::api {

namespace {

void write(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out{path};
    out << content;
}

std::string config_error_message(const EnvMap& env) {
    try {
        (void)config_from_env(env);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kConfigError);
        return e.what();
    }
    ADD_FAILURE() << "expected a config error";
    return {};
}

}  // namespace

TEST(Dotenv, ParsesCommentsExportsAndQuotes) {
    const test::TempDir dir;
    write(dir.file(".env"),
          "# comment\n"
          "\n"
          "LEDGERSEAL_PORT=9000\n"
          "export LEDGERSEAL_HOST = 0.0.0.0\n"
          "LEDGERSEAL_REGISTRY_PATH=\"/tmp/with # hash\"\n"
          "LEDGERSEAL_BACKEND='simulated'\n"
          "LEDGERSEAL_BLOCK_SIZE=2 # trailing note\n"
          "LEDGERSEAL_EMPTY=\n");
    const auto env{load_dotenv(dir.file(".env"))};
    EXPECT_EQ(env.at("LEDGERSEAL_PORT"), "9000");
    EXPECT_EQ(env.at("LEDGERSEAL_HOST"), "0.0.0.0");
    EXPECT_EQ(env.at("LEDGERSEAL_REGISTRY_PATH"), "/tmp/with # hash");
    EXPECT_EQ(env.at("LEDGERSEAL_BACKEND"), "simulated");
    EXPECT_EQ(env.at("LEDGERSEAL_BLOCK_SIZE"), "2");
    EXPECT_EQ(env.at("LEDGERSEAL_EMPTY"), "");
    EXPECT_EQ(env.size(), 6U);
}

TEST(Dotenv, RejectsMalformedAndMissing) {
    const test::TempDir dir;
    write(dir.file("bad.env"), "LEDGERSEAL_PORT\n");
    EXPECT_THROW((void)load_dotenv(dir.file("bad.env")), Error);
    EXPECT_THROW((void)load_dotenv(dir.file("absent.env")), Error);
}

TEST(Env, ProcessEnvironmentWinsOverFile) {
    const EnvMap file{{"LEDGERSEAL_PORT", "1"}, {"LEDGERSEAL_HOST", "a"}};
    const EnvMap process{{"LEDGERSEAL_PORT", "2"}};
    const auto merged{merge_env(file, process)};
    EXPECT_EQ(merged.at("LEDGERSEAL_PORT"), "2");
    EXPECT_EQ(merged.at("LEDGERSEAL_HOST"), "a");
}

TEST(Env, FullConfig) {
    const test::TempDir dir;
    auto env{test::service_env(dir)};
    env["LEDGERSEAL_PORT"] = "8181";
    env["LEDGERSEAL_BLOCK_SIZE"] = "3";
    env["LEDGERSEAL_FAILURE_RATE"] = "0.25";
    env["LEDGERSEAL_PRICING_PATH"] = "/etc/pricing.json";
    const auto config{config_from_env(env)};
    EXPECT_TRUE(config.enabled);
    EXPECT_EQ(config.backend.mode, chain::BackendMode::kSimulated);
    EXPECT_EQ(config.listen_port, 8181);
    EXPECT_EQ(config.backend.block_size, 3U);
    EXPECT_DOUBLE_EQ(config.backend.failure_rate, 0.25);
    EXPECT_EQ(config.registry_path, dir.file("registry.jsonl"));
    EXPECT_EQ(config.backend.journal_path, dir.file("chain.jsonl"));
    EXPECT_EQ(config.pricing_path, std::filesystem::path{"/etc/pricing.json"});
    ASSERT_TRUE(config.wallet);
    EXPECT_EQ(config.wallet->address(), test::wallet(0x11).address());
    EXPECT_EQ(config.host, "127.0.0.1");
}

TEST(Env, JournalDefaultsNextToRegistry) {
    const test::TempDir dir;
    auto env{test::service_env(dir)};
    env.erase("LEDGERSEAL_CHAIN_PATH");
    EXPECT_EQ(config_from_env(env).backend.journal_path, std::filesystem::path{dir.file("registry.jsonl").string() + ".chain"});
}

TEST(Env, MissingKeysNameTheVariable) {
    const test::TempDir dir;
    auto env{test::service_env(dir)};
    env.erase("LEDGERSEAL_FERNET_KEY");
    EXPECT_NE(config_error_message(env).find("LEDGERSEAL_FERNET_KEY"), std::string::npos);

    env = test::service_env(dir);
    env["LEDGERSEAL_PRIVATE_KEY"] = "  ";
    EXPECT_NE(config_error_message(env).find("LEDGERSEAL_PRIVATE_KEY"), std::string::npos);
}

TEST(Env, DisabledNeedsNoKeys) {
    const auto config{config_from_env({{"LEDGERSEAL_ENABLED", "false"}})};
    EXPECT_FALSE(config.enabled);
    EXPECT_FALSE(config.fernet_key);
    EXPECT_FALSE(config.wallet);
}

TEST(Env, BadValuesNameTheVariable) {
    const test::TempDir dir;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"LEDGERSEAL_ENABLED", "maybe"},       {"LEDGERSEAL_BACKEND", "ganache"},
        {"LEDGERSEAL_FERNET_KEY", "short"},    {"LEDGERSEAL_PRIVATE_KEY", "0x1234"},
        {"LEDGERSEAL_CONTRACT_ADDRESS", "0x"}, {"LEDGERSEAL_PORT", "70000"},
        {"LEDGERSEAL_PORT", "80a"},            {"LEDGERSEAL_BLOCK_SIZE", "0"},
        {"LEDGERSEAL_FAILURE_RATE", "1.5"},    {"LEDGERSEAL_FAILURE_RATE", "x"},
    };
    for (const auto& [name, value] : cases) {
        auto env{test::service_env(dir)};
        env[name] = value;
        EXPECT_NE(config_error_message(env).find(name), std::string::npos) << name << "=" << value;
    }
}

TEST(Env, RemoteNeedsRpcUrl) {
    const test::TempDir dir;
    auto env{test::service_env(dir)};
    env["LEDGERSEAL_BACKEND"] = "remote";
    EXPECT_NE(config_error_message(env).find("LEDGERSEAL_RPC_URL"), std::string::npos);
    env["LEDGERSEAL_RPC_URL"] = "http://127.0.0.1:8545";
    EXPECT_EQ(config_from_env(env).backend.mode, chain::BackendMode::kRemoteReceiptOnly);
}

}  // namespace ledgerseal::api
