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

#include <ledgerseal/chain/simulated_backend.hpp>
#include <ledgerseal/common/error.hpp>
#include <ledgerseal/gas/gas_model.hpp>

#include "support/test_support.hpp"

namespace ledgerseal::chain {

namespace {

BackendConfig config(uint64_t block_size = 1, double failure_rate = 0.0) {
    BackendConfig c;
    c.block_size = block_size;
    c.failure_rate = failure_rate;
    return c;
}

class Submitter {
  public:
    Submitter(SimulatedBackend& backend, WalletKey key) : backend_{backend}, key_{std::move(key)} {}

    SignedTransaction make(ContractCall call) {
        return sign_tx(build_tx(key_.address(), nonce_++, std::move(call)), key_);
    }

    TxHash save(const std::string& token, const std::string& uid) { return backend_.submit(make(SaveTextCall{token, uid})); }

    const WalletKey& key() const { return key_; }

  private:
    SimulatedBackend& backend_;
    WalletKey key_;
    uint64_t nonce_{0};
};

ErrorCode submit_error(SimulatedBackend& backend, const SignedTransaction& tx) {
    try {
        backend.submit(tx);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::kInvalidInput;
}

}  // namespace

TEST(SimulatedBackend, OwnerSaveSucceeds) {
    SimulatedBackend backend{test::wallet(1), config()};
    Submitter owner{backend, test::wallet(1)};
    const auto hash{owner.save("tok", "u1")};
    const auto receipt{backend.get_receipt(hash)};
    ASSERT_TRUE(receipt);
    EXPECT_EQ(receipt->status, TxStatus::kSuccess);
    EXPECT_EQ(receipt->entry_index, 0U);
    EXPECT_EQ(backend.total_texts(), 1U);
    EXPECT_EQ(backend.get_text(0), (ledger::TextEntry{"tok", "u1"}));
    EXPECT_EQ(backend.owner(), test::wallet(1).address());
    EXPECT_EQ(backend.contract_address(), simulated_contract_address(test::wallet(1).address()));
}

TEST(SimulatedBackend, NonOwnerSaveFails) {
    SimulatedBackend backend{test::wallet(1), config()};
    backend.register_wallet(test::wallet(2));
    Submitter stranger{backend, test::wallet(2)};
    const auto receipt{backend.get_receipt(stranger.save("tok", "u1"))};
    EXPECT_EQ(receipt->status, TxStatus::kFailed);
    EXPECT_EQ(receipt->failure_reason, "unauthorized");
    EXPECT_FALSE(receipt->entry_index);
    EXPECT_EQ(backend.total_texts(), 0U);
}

TEST(SimulatedBackend, InjectedFailures) {
    SimulatedBackend backend{test::wallet(1), config(1, 1.0)};
    Submitter owner{backend, test::wallet(1)};
    for (int i = 0; i < 20; ++i) {
        const auto receipt{backend.get_receipt(owner.save("tok", "u" + std::to_string(i)))};
        EXPECT_EQ(receipt->status, TxStatus::kFailed);
        EXPECT_EQ(receipt->failure_reason, "injected");
    }
    EXPECT_EQ(backend.total_texts(), 0U);
    EXPECT_EQ(backend.next_nonce(test::wallet(1).address()), 20U);
}

TEST(SimulatedBackend, UnknownHash) {
    SimulatedBackend backend{test::wallet(1), config()};
    EXPECT_FALSE(backend.get_receipt(TxHash{}));
}

TEST(SimulatedBackend, BlockArithmetic) {
    SimulatedBackend backend{test::wallet(1), config(4)};
    Submitter owner{backend, test::wallet(1)};
    std::vector<TxHash> hashes;
    for (int i = 0; i < 5; ++i) hashes.push_back(owner.save("tok", "u" + std::to_string(i)));
    for (int i = 0; i < 4; ++i) {
        const auto r{backend.get_receipt(hashes[i])};
        EXPECT_EQ(r->status, TxStatus::kSuccess);
        EXPECT_EQ(r->block_number, 0U);
        EXPECT_EQ(r->entry_index, static_cast<uint64_t>(i));
    }
    EXPECT_EQ(backend.get_receipt(hashes[4])->status, TxStatus::kPending);
    EXPECT_FALSE(backend.get_receipt(hashes[4])->block_number);
    EXPECT_EQ(backend.total_texts(), 4U);
    EXPECT_EQ(backend.pending_count(), 1U);

    EXPECT_EQ(backend.seal_block(), 1U);
    EXPECT_EQ(backend.get_receipt(hashes[4])->status, TxStatus::kSuccess);
    EXPECT_EQ(backend.get_receipt(hashes[4])->block_number, 1U);
    EXPECT_EQ(backend.total_texts(), 5U);

    // The partial block's remaining slots are skipped.
    const auto next{owner.save("tok", "u5")};
    backend.seal_block();
    EXPECT_EQ(backend.get_receipt(next)->block_number, 2U);
}

TEST(SimulatedBackend, SealWithoutPendingIsIdempotent) {
    SimulatedBackend backend{test::wallet(1), config(4)};
    EXPECT_EQ(backend.seal_block(), 0U);
    EXPECT_EQ(backend.seal_block(), 0U);
    Submitter owner{backend, test::wallet(1)};
    owner.save("tok", "u");
    const uint64_t sealed{backend.seal_block()};
    EXPECT_EQ(backend.seal_block(), sealed);
    EXPECT_EQ(backend.seal_block(), sealed);
}

TEST(SimulatedBackend, ReceiptsFollowSubmissionOrder) {
    std::mt19937_64 rng{17};
    for (int run = 0; run < 20; ++run) {
        SimulatedBackend backend{test::wallet(1), config(1 + rng() % 6)};
        Submitter owner{backend, test::wallet(1)};
        std::vector<TxHash> hashes;
        const int n{static_cast<int>(5 + rng() % 30)};
        for (int i = 0; i < n; ++i) {
            hashes.push_back(owner.save("tok" + std::to_string(i), "u" + std::to_string(i)));
            if (rng() % 5 == 0) backend.seal_block();
        }
        backend.seal_block();
        std::optional<uint64_t> last_block;
        for (int i = 0; i < n; ++i) {
            const auto r{backend.get_receipt(hashes[i])};
            ASSERT_EQ(r->status, TxStatus::kSuccess);
            EXPECT_EQ(r->entry_index, static_cast<uint64_t>(i));
            EXPECT_EQ(backend.get_text(i).uid, "u" + std::to_string(i));
            if (last_block) EXPECT_GE(*r->block_number, *last_block);
            last_block = r->block_number;
        }
    }
}

TEST(SimulatedBackend, NonceRules) {
    SimulatedBackend backend{test::wallet(1), config()};
    const auto key{test::wallet(1)};
    EXPECT_EQ(submit_error(backend, sign_tx(build_tx(key.address(), 2, SaveTextCall{"t", "u"}), key)),
              ErrorCode::kNonceMismatch);
    const auto first{sign_tx(build_tx(key.address(), 0, SaveTextCall{"t", "u"}), key)};
    backend.submit(first);
    EXPECT_EQ(submit_error(backend, first), ErrorCode::kDuplicateTransaction);
    EXPECT_EQ(backend.next_nonce(key.address()), 1U);
    EXPECT_EQ(backend.next_nonce(test::wallet(9).address()), 0U);
}

TEST(SimulatedBackend, RejectsUnknownSignersAndForgeries) {
    SimulatedBackend backend{test::wallet(1), config()};
    const auto stranger{test::wallet(2)};
    EXPECT_EQ(submit_error(backend, sign_tx(build_tx(stranger.address(), 0, SaveTextCall{"t", "u"}), stranger)),
              ErrorCode::kInvalidSignature);
    const auto key{test::wallet(1)};
    auto forged{sign_tx(build_tx(key.address(), 0, SaveTextCall{"t", "u"}), key)};
    forged.signature[0] ^= 1;
    EXPECT_EQ(submit_error(backend, forged), ErrorCode::kInvalidSignature);
}

TEST(SimulatedBackend, Unavailable) {
    SimulatedBackend backend{test::wallet(1), config()};
    Submitter owner{backend, test::wallet(1)};
    const auto hash{owner.save("t", "u")};
    backend.set_available(false);
    EXPECT_EQ(submit_error(backend, owner.make(SaveTextCall{"t", "v"})), ErrorCode::kBackendUnavailable);
    EXPECT_THROW((void)backend.get_receipt(hash), Error);
    EXPECT_THROW((void)backend.get_text(0), Error);
    backend.set_available(true);
    EXPECT_TRUE(backend.get_receipt(hash));
}

TEST(SimulatedBackend, GasLaw) {
    SimulatedBackend backend{test::wallet(1), config()};
    Submitter owner{backend, test::wallet(1)};
    for (std::size_t n : {1U, 100U, 5000U}) {
        const auto tx{owner.make(SaveTextCall{std::string(n, 'x'), "uid"})};
        backend.submit(tx);
        EXPECT_EQ(backend.get_receipt(tx.hash)->gas_used, 20'000U + 16U * tx.tx.payload_bytes());
    }
}

TEST(SimulatedBackend, FinalReceiptsAreStable) {
    SimulatedBackend backend{test::wallet(1), config(3)};
    Submitter owner{backend, test::wallet(1)};
    const auto hash{owner.save("t", "u")};
    backend.seal_block();
    const auto first{backend.get_receipt(hash)};
    for (int i = 0; i < 10; ++i) {
        owner.save("t", "v" + std::to_string(i));
        backend.seal_block();
        EXPECT_EQ(backend.get_receipt(hash), first);
    }
}

TEST(SimulatedBackend, TransferOwnershipTransaction) {
    SimulatedBackend backend{test::wallet(1), config()};
    backend.register_wallet(test::wallet(2));
    Submitter a{backend, test::wallet(1)};
    Submitter b{backend, test::wallet(2)};
    const auto tx{a.make(TransferOwnershipCall{test::wallet(2).address()})};
    backend.submit(tx);
    EXPECT_EQ(backend.get_receipt(tx.hash)->status, TxStatus::kSuccess);
    EXPECT_EQ(backend.owner(), test::wallet(2).address());
    EXPECT_EQ(backend.get_receipt(a.save("t", "u"))->failure_reason, "unauthorized");
    EXPECT_EQ(backend.get_receipt(b.save("t", "u"))->status, TxStatus::kSuccess);
}

TEST(SimulatedBackend, ConfigValidation) {
    EXPECT_THROW(SimulatedBackend(test::wallet(1), config(0)), Error);
    EXPECT_THROW(SimulatedBackend(test::wallet(1), config(1, 1.5)), Error);
    EXPECT_THROW(SimulatedBackend(test::wallet(1), config(1, -0.1)), Error);
}

TEST(SimulatedBackend, JournalReplayReproducesState) {
    const test::TempDir dir;
    auto cfg{config(3, 0.3)};
    cfg.journal_path = dir.file("chain.jsonl");
    std::vector<TxHash> hashes;
    std::vector<std::optional<TxReceipt>> receipts;
    {
        SimulatedBackend backend{test::wallet(1), cfg};
        Submitter owner{backend, test::wallet(1)};
        for (int i = 0; i < 20; ++i) {
            hashes.push_back(owner.save("tok" + std::to_string(i), "u" + std::to_string(i)));
            if (i % 7 == 0) backend.seal_block();
        }
        for (const auto& h : hashes) receipts.push_back(backend.get_receipt(h));
    }
    SimulatedBackend reopened{test::wallet(1), cfg};
    for (std::size_t i = 0; i < hashes.size(); ++i) EXPECT_EQ(reopened.get_receipt(hashes[i]), receipts[i]) << i;
    EXPECT_EQ(reopened.next_nonce(test::wallet(1).address()), 20U);

    // The journal's deployment parameters win over the requested ones.
    auto other{cfg};
    other.block_size = 5;
    EXPECT_EQ(SimulatedBackend(test::wallet(1), other).config().block_size, 3U);
    try {
        SimulatedBackend wrong_deployer{test::wallet(2), cfg};
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kConfigError);
    }
}

TEST(SimulatedBackend, SameScheduleSameReceipts) {
    auto run = [] {
        SimulatedBackend backend{test::wallet(1), config(4, 0.25)};
        Submitter owner{backend, test::wallet(1)};
        std::vector<std::optional<TxReceipt>> out;
        std::vector<TxHash> hashes;
        for (int i = 0; i < 30; ++i) hashes.push_back(owner.save("tok" + std::to_string(i), "u" + std::to_string(i)));
        backend.seal_block();
        for (const auto& h : hashes) out.push_back(backend.get_receipt(h));
        return out;
    };
    EXPECT_EQ(run(), run());
}

}  // namespace ledgerseal::chain
