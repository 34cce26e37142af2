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

#include <ledgerseal/ledger/text_storage.hpp>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal::ledger {

TextStorage TextStorage::deploy(const Address& deployer) { return TextStorage{deployer}; }

uint64_t TextStorage::save_text(const Address& caller, std::string_view text, std::string_view uid) {
    if (caller != owner_) {
        throw Error{ErrorCode::kUnauthorized, "caller " + caller.to_hex() + " is not the owner"};
    }
    if (text.empty()) throw Error{ErrorCode::kInvalidInput, "text must not be empty"};
    if (uid.empty()) throw Error{ErrorCode::kInvalidInput, "uid must not be empty"};
    if (uid.size() > kMaxUidSize) throw Error{ErrorCode::kInvalidInput, "uid exceeds 256 bytes"};
    if (text.size() > kMaxPayloadSize) throw Error{ErrorCode::kInvalidInput, "text exceeds 1 MiB"};

    const uint64_t index{entries_.size()};
    entries_.push_back(TextEntry{std::string{text}, std::string{uid}});
    emit(TextAdded{index, std::string{uid}});
    return index;
}

const TextEntry& TextStorage::get_text(uint64_t index) const {
    if (index >= entries_.size()) {
        throw Error{ErrorCode::kIndexOutOfRange,
                    "index " + std::to_string(index) + " out of range (total " + std::to_string(entries_.size()) + ")"};
    }
    return entries_[index];
}

void TextStorage::transfer_ownership(const Address& caller, const Address& new_owner) {
    if (caller != owner_) {
        throw Error{ErrorCode::kUnauthorized, "caller " + caller.to_hex() + " is not the owner"};
    }
    const Address previous{owner_};
    owner_ = new_owner;
    emit(OwnershipTransferred{previous, new_owner});
}

void TextStorage::emit(std::variant<TextAdded, OwnershipTransferred> payload) {
    events_.push_back(ContractEvent{events_.size(), std::move(payload)});
}

ReplayedState replay_events(const Address& deployer, std::span<const ContractEvent> events) {
    ReplayedState state{deployer, {}};
    uint64_t expected_seq{0};
    for (const auto& event : events) {
        if (event.seq != expected_seq++) throw Error{ErrorCode::kInvalidInput, "event sequence gap"};
        if (const auto* added = std::get_if<TextAdded>(&event.payload)) {
            if (added->index != state.uids.size()) throw Error{ErrorCode::kInvalidInput, "entry index gap"};
            state.uids.push_back(added->uid);
        } else {
            const auto& transfer{std::get<OwnershipTransferred>(event.payload)};
            if (transfer.previous_owner != state.owner) {
                throw Error{ErrorCode::kInvalidInput, "ownership transfer from a non-owner"};
            }
            state.owner = transfer.new_owner;
        }
    }
    return state;
}

}  // namespace ledgerseal::ledger
