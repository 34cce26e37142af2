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

#ifndef LEDGERSEAL_LEDGER_TEXT_STORAGE_HPP_
#define LEDGERSEAL_LEDGER_TEXT_STORAGE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <ledgerseal/ledger/address.hpp>

namespace ledgerseal::ledger {

inline constexpr std::size_t kMaxUidSize{256};

struct TextEntry {
    std::string text;  // sealed token
    std::string uid;

    friend bool operator==(const TextEntry&, const TextEntry&) = default;
};

struct TextAdded {
    uint64_t index{0};
    std::string uid;

    friend bool operator==(const TextAdded&, const TextAdded&) = default;
};

struct OwnershipTransferred {
    Address previous_owner;
    Address new_owner;

    friend bool operator==(const OwnershipTransferred&, const OwnershipTransferred&) = default;
};

struct ContractEvent {
    uint64_t seq{0};
    std::variant<TextAdded, OwnershipTransferred> payload;

    friend bool operator==(const ContractEvent&, const ContractEvent&) = default;
};

//! In-process model of the TextStorage contract: an append-only list of
//! (token, uid) entries where only the owner may write, plus an event log.
//!
//! This is a plain value type. Callers that share one instance across threads
//! must serialize mutations themselves (chain::SimulatedBackend does).
class TextStorage {
  public:
    //! Fresh deployment: owner = deployer, no entries, no events.
    static TextStorage deploy(const Address& deployer);

    //! Appends an entry and returns its 0-based index.
    //! Throws Error{kUnauthorized} when caller is not the owner, Error{kInvalidInput}
    //! for an empty text/uid, a uid over 256 bytes or a text over 1 MiB.
    uint64_t save_text(const Address& caller, std::string_view text, std::string_view uid);

    //! Throws Error{kIndexOutOfRange} when index >= total_texts(). No access check.
    [[nodiscard]] const TextEntry& get_text(uint64_t index) const;

    [[nodiscard]] uint64_t total_texts() const noexcept { return entries_.size(); }

    //! Throws Error{kUnauthorized} when caller is not the owner.
    void transfer_ownership(const Address& caller, const Address& new_owner);

    [[nodiscard]] const Address& owner() const noexcept { return owner_; }
    [[nodiscard]] std::span<const TextEntry> entries() const noexcept { return entries_; }
    [[nodiscard]] std::span<const ContractEvent> events() const noexcept { return events_; }

  private:
    explicit TextStorage(const Address& owner) : owner_{owner} {}

    void emit(std::variant<TextAdded, OwnershipTransferred> payload);

    Address owner_;
    std::vector<TextEntry> entries_;
    std::vector<ContractEvent> events_;
};

//! What an observer can rebuild from the event log alone.
struct ReplayedState {
    Address owner;
    std::vector<std::string> uids;  // by entry index

    friend bool operator==(const ReplayedState&, const ReplayedState&) = default;
};

//! Rebuilds owner and per-index uids from a deployer and an event log.
//! Throws Error{kInvalidInput} if sequence numbers or indexes are not contiguous.
ReplayedState replay_events(const Address& deployer, std::span<const ContractEvent> events);

}  // namespace ledgerseal::ledger

#endif  // LEDGERSEAL_LEDGER_TEXT_STORAGE_HPP_
