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

#include <ledgerseal/registry/registry.hpp>

#include <fstream>
#include <mutex>

#include <json.hpp>

#include <ledgerseal/common/error.hpp>
#include <ledgerseal/crypto/hash.hpp>

namespace ledgerseal::registry {

using ordered_json = nlohmann::ordered_json;

std::string RegistryRecord::to_json_line() const {
    ordered_json line;
    line["uid"] = uid;
    line["entry_index"] = entry_index;
    line["tx_hash"] = tx_hash;
    line["plaintext_digest"] = plaintext_digest;
    line["created_at"] = created_at;
    return line.dump();
}

RegistryRecord RegistryRecord::from_json_line(std::string_view line) {
    try {
        const auto doc = ordered_json::parse(line);
        if (!doc.is_object() || doc.size() != 5) throw Error{ErrorCode::kStorageFailure, "registry line has wrong fields"};
        RegistryRecord record{doc.at("uid").get<std::string>(), doc.at("entry_index").get<uint64_t>(),
                              doc.at("tx_hash").get<std::string>(), doc.at("plaintext_digest").get<std::string>(),
                              doc.at("created_at").get<std::string>()};
        if (record.uid.empty()) throw Error{ErrorCode::kStorageFailure, "registry line has an empty uid"};
        return record;
    } catch (const nlohmann::json::exception& e) {
        throw Error{ErrorCode::kStorageFailure, std::string{"malformed registry line: "} + e.what()};
    }
}

Registry::Registry(std::filesystem::path path, Clock clock) : clock_{std::move(clock)}, file_{std::move(path)} {
    const auto& lines{file_.initial_lines()};
    records_.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        RegistryRecord record;
        try {
            record = RegistryRecord::from_json_line(lines[i]);
        } catch (const Error& e) {
            throw Error{ErrorCode::kStorageFailure,
                        file_.path().string() + ":" + std::to_string(i + 1) + ": " + e.what()};
        }
        if (!by_uid_.emplace(record.uid, records_.size()).second) {
            throw Error{ErrorCode::kStorageFailure, file_.path().string() + ":" + std::to_string(i + 1) +
                                                        ": duplicate uid '" + record.uid + "' (corrupt registry)"};
        }
        records_.push_back(std::move(record));
    }
}

RegistryRecord Registry::record_save(std::string_view uid, uint64_t entry_index, std::string_view tx_hash,
                                     ByteView plaintext) {
    if (uid.empty()) throw Error{ErrorCode::kInvalidInput, "uid must not be empty"};
    RegistryRecord record{std::string{uid}, entry_index, std::string{tx_hash}, crypto::sha256_hex(plaintext),
                          format_rfc3339(clock_())};
    std::unique_lock lock{mutex_};
    if (by_uid_.contains(record.uid)) throw Error{ErrorCode::kDuplicateUid, "uid '" + record.uid + "' already exists"};
    file_.append(record.to_json_line());
    by_uid_.emplace(record.uid, records_.size());
    records_.push_back(record);
    return record;
}

std::optional<RegistryRecord> Registry::lookup(std::string_view uid) const {
    std::shared_lock lock{mutex_};
    const auto it{by_uid_.find(std::string{uid})};
    if (it == by_uid_.end()) return std::nullopt;
    return records_[it->second];
}

bool Registry::contains(std::string_view uid) const {
    std::shared_lock lock{mutex_};
    return by_uid_.contains(std::string{uid});
}

std::vector<RegistryRecord> Registry::records() const {
    std::shared_lock lock{mutex_};
    return records_;
}

std::size_t Registry::size() const {
    std::shared_lock lock{mutex_};
    return records_.size();
}

bool overwrite_digest(const std::filesystem::path& path, std::string_view uid, std::string_view new_digest) {
    std::vector<RegistryRecord> records;
    {
        const AppendOnlyFile reader{path};
        for (const auto& line : reader.initial_lines()) records.push_back(RegistryRecord::from_json_line(line));
    }
    bool found{false};
    for (auto& record : records) {
        if (record.uid == uid) {
            record.plaintext_digest = std::string{new_digest};
            found = true;
        }
    }
    if (!found) return false;

    auto tmp{path};
    tmp += ".tmp";
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        for (const auto& record : records) out << record.to_json_line() << '\n';
        out.flush();
        if (!out) throw Error{ErrorCode::kStorageFailure, "cannot write " + tmp.string()};
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error{ErrorCode::kStorageFailure, "cannot replace " + path.string() + ": " + ec.message()};
    return true;
}

}  // namespace ledgerseal::registry
