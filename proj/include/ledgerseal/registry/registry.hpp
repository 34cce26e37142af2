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

#ifndef LEDGERSEAL_REGISTRY_REGISTRY_HPP_
#define LEDGERSEAL_REGISTRY_REGISTRY_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <ledgerseal/common/append_file.hpp>
#include <ledgerseal/common/bytes.hpp>
#include <ledgerseal/common/clock.hpp>

namespace ledgerseal::registry {

struct RegistryRecord {
    std::string uid;
    uint64_t entry_index{0};
    std::string tx_hash;           // 0x + 64 hex
    std::string plaintext_digest;  // SHA-256 hex of the original plaintext
    std::string created_at;        // RFC 3339 UTC

    //! One JSON object with exactly the five fields above, in that order.
    [[nodiscard]] std::string to_json_line() const;
    //! Throws Error{kStorageFailure} on a malformed line.
    static RegistryRecord from_json_line(std::string_view line);

    friend bool operator==(const RegistryRecord&, const RegistryRecord&) = default;
};

/// Local UID -> chain coordinates map, persisted as UTF-8 JSON lines.
///
/// Appends are serialized and fsynced before record_save() returns; readers
/// share a lock and never block each other.
class Registry {
  public:
    //! Loads existing records. Throws Error{kStorageFailure} on a malformed line
    //! or a uid that appears twice.
    explicit Registry(std::filesystem::path path, Clock clock = system_clock());

    //! Throws Error{kDuplicateUid} or Error{kStorageFailure}.
    RegistryRecord record_save(std::string_view uid, uint64_t entry_index, std::string_view tx_hash,
                               ByteView plaintext);

    [[nodiscard]] std::optional<RegistryRecord> lookup(std::string_view uid) const;
    [[nodiscard]] bool contains(std::string_view uid) const;

    //! Snapshot in insertion order.
    [[nodiscard]] std::vector<RegistryRecord> records() const;
    [[nodiscard]] std::size_t size() const;

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return file_.path(); }

  private:
    Clock clock_;
    mutable std::shared_mutex mutex_;
    AppendOnlyFile file_;
    std::vector<RegistryRecord> records_;
    std::unordered_map<std::string, std::size_t> by_uid_;
};

//! Rewrites the stored digest of uid in place (atomic replace of the file).
//! Deliberately breaks the append-only contract; only the tamper demo and tests
//! use it. No Registry instance may be open on path. Returns false if uid is absent.
bool overwrite_digest(const std::filesystem::path& path, std::string_view uid, std::string_view new_digest);

}  // namespace ledgerseal::registry

#endif  // LEDGERSEAL_REGISTRY_REGISTRY_HPP_
