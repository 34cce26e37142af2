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
#include <random>

#include <gtest/gtest.h>

#include <ledgerseal/common/append_file.hpp>
#include <ledgerseal/common/bytes.hpp>
#include <ledgerseal/common/clock.hpp>
#include <ledgerseal/common/error.hpp>
#include <ledgerseal/ledger/address.hpp>

#include "support/test_support.hpp"

namespace ledgerseal {

TEST(Hex, RoundTrip) {
    const Bytes raw{0x00, 0x01, 0xab, 0xff};
    EXPECT_EQ(to_hex(raw), "0001abff");
    EXPECT_EQ(to_hex(raw, true), "0x0001abff");
    EXPECT_EQ(from_hex("0001ABff"), raw);
    EXPECT_EQ(from_hex("0x0001abff"), raw);
    EXPECT_EQ(from_hex(""), Bytes{});
}

TEST(Hex, RejectsMalformed) {
    EXPECT_FALSE(from_hex("abc"));
    EXPECT_FALSE(from_hex("zz"));
    EXPECT_FALSE(from_hex("0x0g"));
}

TEST(Base64Url, Rfc4648Vectors) {
    EXPECT_EQ(base64url_encode(as_bytes("")), "");
    EXPECT_EQ(base64url_encode(as_bytes("f")), "Zg==");
    EXPECT_EQ(base64url_encode(as_bytes("fo")), "Zm8=");
    EXPECT_EQ(base64url_encode(as_bytes("foo")), "Zm9v");
    EXPECT_EQ(base64url_encode(as_bytes("foobar")), "Zm9vYmFy");
    const Bytes url_safe{0xfb, 0xff};
    EXPECT_EQ(base64url_encode(url_safe), "-_8=");
    EXPECT_EQ(base64url_decode("-_8="), url_safe);
    EXPECT_EQ(base64url_decode("-_8"), url_safe);
}

TEST(Base64Url, StrictDecoding) {
    EXPECT_FALSE(base64url_decode("+/8="));   // standard alphabet
    EXPECT_FALSE(base64url_decode("Zg=a"));   // padding in the middle
    EXPECT_FALSE(base64url_decode("Zh=="));   // non-zero trailing bits
    EXPECT_FALSE(base64url_decode("Z"));      // impossible length
    EXPECT_FALSE(base64url_decode("Zg==="));  // too much padding
}

TEST(Base64Url, RandomRoundTrip) {
    std::mt19937_64 rng{7};
    for (std::size_t n = 0; n < 200; ++n) {
        const Bytes raw{test::random_bytes(rng, n)};
        EXPECT_EQ(base64url_decode(base64url_encode(raw)), raw) << n;
    }
}

TEST(BigEndian, FixedWidth) {
    Bytes out;
    append_be64(out, 0x0102030405060708ULL);
    append_be32(out, 0x0a0b0c0dU);
    EXPECT_EQ(to_hex(out), "01020304050607080a0b0c0d");
    EXPECT_EQ(read_be64(out), 0x0102030405060708ULL);
}

TEST(Address, ParseAndRender) {
    const std::string hex{"0x00112233445566778899aabbccddeeff00112233"};
    const auto addr{Address::from_hex(hex)};
    ASSERT_TRUE(addr);
    EXPECT_EQ(addr->to_hex(), hex);
    EXPECT_EQ(addr->to_hex().size(), 42U);
    EXPECT_EQ(Address::from_hex("00112233445566778899AABBCCDDEEFF00112233"), addr);
    EXPECT_FALSE(Address::from_hex("0x0011"));
    EXPECT_FALSE(Address::from_hex(hex + "00"));
}

TEST(Clock, Rfc3339) {
    EXPECT_EQ(format_rfc3339(test::epoch_plus(0)), "1970-01-01T00:00:00Z");
    EXPECT_EQ(format_rfc3339(test::epoch_plus(1724025600)), "2024-08-19T00:00:00Z");
    EXPECT_EQ(unix_seconds(test::epoch_plus(42)), 42U);
}

TEST(AppendOnlyFile, PersistsLinesAndDropsTornTail) {
    const test::TempDir dir;
    const auto path{dir.file("sub/log.jsonl")};
    {
        AppendOnlyFile file{path};
        EXPECT_TRUE(file.initial_lines().empty());
        file.append("one");
        file.append("two");
    }
    {
        std::ofstream torn{path, std::ios::app};
        torn << "thr";
    }
    {
        AppendOnlyFile file{path};
        EXPECT_EQ(file.initial_lines(), (std::vector<std::string>{"one", "two"}));
        file.append("three");
    }
    const AppendOnlyFile file{path};
    EXPECT_EQ(file.initial_lines(), (std::vector<std::string>{"one", "two", "three"}));
}

TEST(AppendOnlyFile, RejectsEmbeddedNewline) {
    const test::TempDir dir;
    AppendOnlyFile file{dir.file("log")};
    EXPECT_THROW(file.append("a\nb"), Error);
}

}  // namespace ledgerseal
