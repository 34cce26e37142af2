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


#include <random>

#include <gtest/gtest.h>

#include <ledgerseal/crypto/seal.hpp>

#include "support/oracle.hpp"
#include "support/test_support.hpp"

namespace ledgerseal::crypto {

using test::OracleRequest;

TEST(Interop, ReferenceReadsOurToken) {
    const auto out{test::run_oracle({OracleRequest{OracleRequest::Op::kUnseal, test::kVectorKey,
                                                   seal(as_bytes("hello"), test::vector_key()), {}, 0, {}}})};
    ASSERT_TRUE(out.at(0).ok);
    EXPECT_EQ(to_string(out[0].plain), "hello");
}

TEST(Interop, FixedInputsGiveIdenticalTokens) {
    std::mt19937_64 rng{31};
    std::vector<OracleRequest> requests;
    std::vector<std::string> ours;
    for (int i = 0; i < 10; ++i) {
        OracleRequest req{OracleRequest::Op::kSealAt, test::kVectorKey, {}, test::random_bytes(rng, rng() % 300),
                          1'700'000'000U + static_cast<uint64_t>(i), {}};
        for (auto& b : req.iv) b = static_cast<uint8_t>(rng());
        ours.push_back(seal(req.plain, test::vector_key(), req.timestamp, req.iv));
        requests.push_back(std::move(req));
    }
    const auto out{test::run_oracle(requests)};
    for (std::size_t i = 0; i < out.size(); ++i) {
        ASSERT_TRUE(out[i].ok);
        EXPECT_EQ(out[i].token, ours[i]) << i;
    }
}

TEST(Interop, BothDirections) {
    std::mt19937_64 rng{32};
    const auto key{FernetKey::generate()};
    const std::string key_text{key.to_base64url()};
    std::vector<Bytes> messages{Bytes{}};
    for (int i = 0; i < 20; ++i) messages.push_back(test::random_bytes(rng, rng() % 1000));

    std::vector<OracleRequest> requests;
    for (const auto& m : messages) {
        requests.push_back({OracleRequest::Op::kUnseal, key_text, seal(m, key), {}, 0, {}});
        requests.push_back({OracleRequest::Op::kSeal, key_text, {}, m, 0, {}});
    }
    const auto out{test::run_oracle(requests)};
    for (std::size_t i = 0; i < messages.size(); ++i) {
        const auto& theirs_of_ours{out[2 * i]};
        ASSERT_TRUE(theirs_of_ours.ok) << theirs_of_ours.error;
        EXPECT_EQ(theirs_of_ours.plain, messages[i]);
        ASSERT_TRUE(out[2 * i + 1].ok);
        EXPECT_EQ(unseal(out[2 * i + 1].token, key), messages[i]);
    }
}

TEST(Interop, ReferenceRejectsOurTamperedTokens) {
    const auto key{test::vector_key()};
    const Bytes raw{*base64url_decode(seal(as_bytes("tamper me"), key))};
    std::vector<OracleRequest> requests;
    for (std::size_t pos = 0; pos < raw.size(); pos += 7) {
        Bytes bad{raw};
        bad[pos] ^= 0x10;
        requests.push_back({OracleRequest::Op::kUnseal, test::kVectorKey, base64url_encode(bad), {}, 0, {}});
    }
    for (const auto& res : test::run_oracle(requests)) EXPECT_FALSE(res.ok);
}

}  // namespace ledgerseal::crypto
