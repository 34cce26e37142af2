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

#ifndef LEDGERSEAL_COMMON_APPEND_FILE_HPP_
#define LEDGERSEAL_COMMON_APPEND_FILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ledgerseal {

//! Line-oriented append-only file. Each append() writes one full line and
//! fsyncs before returning. Not internally synchronized.
class AppendOnlyFile {
  public:
    //! Creates the file (and parent directories) if missing. An unterminated last
    //! line, left behind by a crash mid-write, is truncated away; it was never
    //! acknowledged. Throws Error{kStorageFailure}.
    explicit AppendOnlyFile(std::filesystem::path path);
    ~AppendOnlyFile();

    AppendOnlyFile(const AppendOnlyFile&) = delete;
    AppendOnlyFile& operator=(const AppendOnlyFile&) = delete;

    //! Complete lines present when the file was opened, without '\n'.
    [[nodiscard]] const std::vector<std::string>& initial_lines() const noexcept { return initial_lines_; }

    //! line must not contain '\n'. Throws Error{kStorageFailure}.
    void append(std::string_view line);

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

  private:
    std::filesystem::path path_;
    int fd_{-1};
    std::vector<std::string> initial_lines_;
};

}  // namespace ledgerseal

#endif  // LEDGERSEAL_COMMON_APPEND_FILE_HPP_
