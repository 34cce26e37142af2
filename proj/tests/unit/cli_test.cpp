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


#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include <ledgerseal/api/service.hpp>
#include <ledgerseal/cli/cli.hpp>
#include <ledgerseal/registry/registry.hpp>

#include "support/test_support.hpp"

extern char** environ;

namespace ledgerseal::cli {

namespace {

using nlohmann::json;

struct Outcome {
    int code{-1};
    std::string out;
    std::string err;

    [[nodiscard]] json doc() const { return json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args, const api::EnvMap& env) {
    std::ostringstream out;
    std::ostringstream err;
    Outcome outcome;
    outcome.code = run(args, out, err, env);
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
}

class CliTest : public ::testing::Test {
  protected:
    Outcome cmd(std::vector<std::string> args) const { return invoke(args, env_); }

    test::TempDir dir_;
    api::EnvMap env_{test::service_env(dir_)};
};

}  // namespace

TEST(CliKeygen, ShapesAndFreshness) {
    const auto first{invoke({"keygen"}, {})};
    const auto second{invoke({"keygen"}, {})};
    ASSERT_EQ(first.code, kExitOk);
    const auto a = first.doc();
    const auto b = second.doc();
    EXPECT_EQ(a["fernet_key"].get<std::string>().size(), 44U);
    EXPECT_EQ(a["private_key"].get<std::string>().size(), 66U);
    EXPECT_EQ(a["address"].get<std::string>().size(), 42U);
    EXPECT_NE(a["fernet_key"], b["fernet_key"]);
    EXPECT_NE(a["private_key"], b["private_key"]);
}

TEST(CliKeygen, GeneratedKeysWorkEndToEnd) {
    const auto keys = invoke({"keygen"}, {}).doc();
    const test::TempDir dir;
    const api::EnvMap env{{"LEDGERSEAL_FERNET_KEY", keys["fernet_key"]},
                          {"LEDGERSEAL_PRIVATE_KEY", keys["private_key"]},
                          {"LEDGERSEAL_CONTRACT_ADDRESS", keys["contract_address"]},
                          {"LEDGERSEAL_REGISTRY_PATH", dir.file("r.jsonl").string()}};
    ASSERT_EQ(invoke({"save", "--uid", "k1", "--text", "fresh keys"}, env).code, kExitOk);
    const auto got{invoke({"get", "--uid", "k1"}, env)};
    ASSERT_EQ(got.code, kExitOk) << got.err;
    EXPECT_EQ(got.doc()["text"], "fresh keys");
}

TEST_F(CliTest, SaveGetVerify) {
    const auto saved{cmd({"save", "--uid", "r1", "--text", "round trip"})};
    ASSERT_EQ(saved.code, kExitOk) << saved.err;
    const auto doc = saved.doc();
    EXPECT_EQ(doc["uid"], "r1");
    EXPECT_EQ(doc["entry_index"], 0);
    EXPECT_EQ(doc["tx_hash"].get<std::string>().size(), 66U);

    const auto got{cmd({"get", "--uid", "r1"})};
    EXPECT_EQ(got.code, kExitOk);
    EXPECT_EQ(got.doc()["text"], "round trip");

    EXPECT_EQ(cmd({"verify", "--uid", "r1"}).code, kExitOk);
    EXPECT_EQ(cmd({"verify", "--uid", "r1", "--text", "round trip"}).code, kExitOk);
    const auto mismatch{cmd({"verify", "--uid", "r1", "--text", "round trap"})};
    EXPECT_EQ(mismatch.code, kExitVerdict);
    EXPECT_EQ(mismatch.doc()["status"], "mismatch");
    EXPECT_EQ(cmd({"verify", "--uid", "ghost"}).code, kExitVerdict);
    EXPECT_EQ(cmd({"get", "--uid", "ghost"}).code, kExitVerdict);
}

TEST_F(CliTest, DuplicateUidIsNonzero) {
    ASSERT_EQ(cmd({"save", "--uid", "r1", "--text", "a"}).code, kExitOk);
    EXPECT_EQ(cmd({"save", "--uid", "r1", "--text", "b"}).code, kExitVerdict);
}

TEST_F(CliTest, LargeFileGasLaw) {
    const auto path{dir_.file("review.txt")};
    {
        std::ofstream out{path, std::ios::binary};
        std::mt19937_64 rng{3};
        const auto bytes{test::random_bytes(rng, 100 * 1024)};
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    const auto saved{cmd({"save", "--uid", "big", "--file", path.string()})};
    ASSERT_EQ(saved.code, kExitOk) << saved.err;
    const auto doc = saved.doc();

    // Payload is the signed transaction body; recover the token length from the chain.
    const auto got{cmd({"get", "--uid", "big"})};
    ASSERT_EQ(got.code, kExitOk);
    const api::ReviewService service{api::config_from_env(env_)};
    const auto token_size{service.backend()->get_text(doc["entry_index"]).text.size()};
    const uint64_t payload{token_size + 3 + chain::kSaveTextFraming};
    EXPECT_EQ(doc["gas_used"], 20'000 + 16 * payload);
}

TEST_F(CliTest, VerifyAll) {
    const auto empty{cmd({"verify-all"})};
    EXPECT_EQ(empty.code, kExitOk);
    EXPECT_EQ(empty.doc()["total"], 0);

    for (const char* uid : {"a", "b", "c"}) ASSERT_EQ(cmd({"save", "--uid", uid, "--text", uid}).code, kExitOk);
    const auto clean{cmd({"verify-all"})};
    EXPECT_EQ(clean.code, kExitOk);
    EXPECT_EQ(clean.doc()["verified"], 3);

    ASSERT_TRUE(registry::overwrite_digest(dir_.file("registry.jsonl"), "b", std::string(64, 'e')));
    const auto tampered{cmd({"verify-all"})};
    EXPECT_EQ(tampered.code, kExitVerdict);
    EXPECT_EQ(tampered.doc()["mismatched"], 1);
    EXPECT_EQ(tampered.doc()["verified"], 2);
}

TEST_F(CliTest, VerifyAllRegistryFlag) {
    const auto other{dir_.file("other.jsonl")};
    ASSERT_EQ(cmd({"save", "--uid", "a", "--text", "a", "--registry", other.string()}).code, kExitOk);
    EXPECT_EQ(cmd({"verify-all"}).doc()["total"], 0);
    EXPECT_EQ(cmd({"verify-all", "--registry", other.string()}).doc()["total"], 1);
}

TEST_F(CliTest, GasReport) {
    const auto csv{cmd({"gas-report"})};
    ASSERT_EQ(csv.code, kExitOk);
    std::istringstream lines{csv.out};
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "size_bytes,network,gas_units,native_cost,usd_cost,savings_percent");
    int rows{0};
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_GT(std::stod(line.substr(line.rfind(',') + 1)), 98.0) << line;
    }
    EXPECT_EQ(rows, 8);
    EXPECT_EQ(cmd({"gas-report"}).out, csv.out);

    const auto single{cmd({"gas-report", "--sizes", "1000", "--format", "json"})};
    ASSERT_EQ(single.code, kExitOk);
    for (const auto& quote : single.doc()["sizes"][0]["quotes"]) EXPECT_EQ(quote["gas_units"], 36000);

    EXPECT_EQ(cmd({"gas-report", "--sizes", "0"}).code, kExitUsage);
    EXPECT_EQ(cmd({"gas-report", "--sizes", "12,x"}).code, kExitUsage);
    EXPECT_EQ(cmd({"gas-report", "--format", "xml"}).code, kExitUsage);

    const auto file{dir_.file("report.csv")};
    ASSERT_EQ(cmd({"gas-report", "-o", file.string()}).code, kExitOk);
    std::ifstream in{file};
    EXPECT_EQ(std::string(std::istreambuf_iterator<char>{in}, {}), csv.out);
}

TEST_F(CliTest, GasReportNeedsNoKeys) { EXPECT_EQ(invoke({"gas-report"}, {}).code, kExitOk); }

TEST_F(CliTest, TamperDemo) {
    ASSERT_EQ(cmd({"save", "--uid", "r1", "--text", "honest"}).code, kExitOk);
    EXPECT_EQ(cmd({"tamper-demo", "--uid", "r1"}).code, kExitUsage);
    EXPECT_EQ(cmd({"verify-all"}).code, kExitOk);
    EXPECT_EQ(cmd({"tamper-demo", "--uid", "ghost", "--yes"}).code, kExitUsage);

    const auto demo{cmd({"tamper-demo", "--uid", "r1", "--yes"})};
    ASSERT_EQ(demo.code, kExitOk) << demo.err;
    EXPECT_EQ(demo.doc()["before"]["status"], "verified");
    EXPECT_EQ(demo.doc()["after"]["status"], "mismatch");
    EXPECT_EQ(cmd({"verify-all"}).code, kExitVerdict);
}

TEST_F(CliTest, UsageAndRuntimeErrors) {
    EXPECT_EQ(cmd({}).code, kExitUsage);
    EXPECT_EQ(cmd({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cmd({"save", "--text", "no uid"}).code, kExitUsage);
    EXPECT_EQ(cmd({"save", "--uid", "r1"}).code, kExitUsage);
    EXPECT_EQ(cmd({"save", "--uid", "r1", "--text", "a", "--file", "/dev/null"}).code, kExitUsage);
    EXPECT_EQ(cmd({"--help"}).code, kExitOk);

    auto env{env_};
    env.erase("LEDGERSEAL_FERNET_KEY");
    const auto missing{invoke({"save", "--uid", "r1", "--text", "a"}, env)};
    EXPECT_EQ(missing.code, kExitRuntime);
    EXPECT_NE(missing.err.find("LEDGERSEAL_FERNET_KEY"), std::string::npos);
    EXPECT_TRUE(missing.out.empty());
}

TEST_F(CliTest, EnvFile) {
    const auto env_file{dir_.file(".env")};
    {
        std::ofstream out{env_file};
        for (const auto& [k, v] : env_) out << k << "=" << v << "\n";
    }
    ASSERT_EQ(invoke({"save", "--uid", "r1", "--text", "x", "--env-file", env_file.string()}, {}).code, kExitOk);
    EXPECT_EQ(cmd({"get", "--uid", "r1"}).doc()["text"], "x");
}

namespace {

// Runs the real binary with env, capturing the first stdout line.
class ServeProcess {
  public:
    ServeProcess(const api::EnvMap& env, const std::vector<std::string>& extra) {
        int fds[2];
        if (pipe(fds) != 0) throw std::runtime_error{"pipe"};
        posix_spawn_file_actions_t actions;
        posix_spawn_file_actions_init(&actions);
        posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
        posix_spawn_file_actions_addclose(&actions, fds[0]);

        std::vector<std::string> args{LEDGERSEAL_CLI_BINARY, "serve", "--port", "0"};
        args.insert(args.end(), extra.begin(), extra.end());
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        argv.push_back(nullptr);

        std::vector<std::string> env_strings;
        for (char** e = environ; *e != nullptr; ++e) {
            if (std::string_view{*e}.starts_with("LEDGERSEAL_")) continue;
            env_strings.emplace_back(*e);
        }
        for (const auto& [k, v] : env) env_strings.push_back(k + "=" + v);
        std::vector<char*> envp;
        for (auto& e : env_strings) envp.push_back(e.data());
        envp.push_back(nullptr);

        const int rc{posix_spawn(&pid_, argv[0], &actions, nullptr, argv.data(), envp.data())};
        posix_spawn_file_actions_destroy(&actions);
        close(fds[1]);
        if (rc != 0) {
            close(fds[0]);
            throw std::runtime_error{"posix_spawn failed"};
        }
        stdout_ = fds[0];
    }

    ~ServeProcess() {
        if (pid_ > 0) {
            kill(pid_, SIGKILL);
            waitpid(pid_, nullptr, 0);
        }
        if (stdout_ >= 0) close(stdout_);
    }

    std::string first_line() {
        std::string line;
        char c{0};
        while (read(stdout_, &c, 1) == 1 && c != '\n') line.push_back(c);
        return line;
    }

    int terminate() {
        kill(pid_, SIGTERM);
        int status{0};
        waitpid(pid_, &status, 0);
        pid_ = -1;
        return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
    }

  private:
    pid_t pid_{-1};
    int stdout_{-1};
};

}  // namespace

TEST_F(CliTest, ServeAnswersAndShutsDownCleanly) {
    const auto start{std::chrono::steady_clock::now()};
    ServeProcess process{env_, {}};
    const auto ready = json::parse(process.first_line());
    const auto url{ready["listening"].get<std::string>()};
    httplib::Client client{url};
    const auto health{client.Get("/healthz")};
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds{2});

    for (int i = 0; i < 5; ++i) {
        const json body{{"uid", "s" + std::to_string(i)}, {"text", "served " + std::to_string(i)}};
        ASSERT_EQ(client.Post("/api/v1/reviews", body.dump(), "application/json")->status, 201);
    }

    // Remote-mode CLI against the live server.
    const auto remote{cmd({"get", "--uid", "s3", "--server", url})};
    EXPECT_EQ(remote.code, kExitOk);
    EXPECT_EQ(remote.doc()["text"], "served 3");
    EXPECT_EQ(cmd({"save", "--uid", "s3", "--text", "dup", "--server", url}).code, kExitVerdict);
    EXPECT_EQ(cmd({"verify", "--uid", "s3", "--text", "served 3", "--server", url}).code, kExitOk);
    EXPECT_EQ(cmd({"verify", "--uid", "s3", "--text", "served 4", "--server", url}).code, kExitVerdict);

    EXPECT_EQ(process.terminate(), 0);
    const registry::Registry reopened{dir_.file("registry.jsonl")};
    EXPECT_EQ(reopened.size(), 5U);
    EXPECT_EQ(cmd({"verify-all"}).doc()["verified"], 5);
}

TEST_F(CliTest, ServeMissingKeyExits3) {
    auto env{env_};
    env.erase("LEDGERSEAL_PRIVATE_KEY");
    ServeProcess process{env, {}};
    EXPECT_EQ(process.first_line(), "");
    EXPECT_EQ(process.terminate(), kExitRuntime);
}

}  // namespace ledgerseal::cli
