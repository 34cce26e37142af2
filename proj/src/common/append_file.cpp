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

#include <ledgerseal/common/append_file.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal {

namespace {

[[noreturn]] void storage_failure(const std::string& what, const std::filesystem::path& path) {
    throw Error{ErrorCode::kStorageFailure, what + " " + path.string() + ": " + std::strerror(errno)};
}

}  // namespace

AppendOnlyFile::AppendOnlyFile(std::filesystem::path path) : path_{std::move(path)} {
    std::error_code ec;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);

    std::string content;
    if (std::ifstream in{path_, std::ios::binary}) {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        content = buffer.str();
    }
    const std::size_t complete{content.rfind('\n') == std::string::npos ? 0 : content.rfind('\n') + 1};
    if (complete != content.size()) {
        std::filesystem::resize_file(path_, complete, ec);
        if (ec) throw Error{ErrorCode::kStorageFailure, "cannot truncate torn tail of " + path_.string()};
    }
    std::size_t start{0};
    while (start < complete) {
        const std::size_t end{content.find('\n', start)};
        if (end > start) initial_lines_.emplace_back(content.substr(start, end - start));
        start = end + 1;
    }

    fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) storage_failure("cannot open", path_);
}

AppendOnlyFile::~AppendOnlyFile() {
    if (fd_ >= 0) ::close(fd_);
}

void AppendOnlyFile::append(std::string_view line) {
    if (line.find('\n') != std::string_view::npos) {
        throw Error{ErrorCode::kStorageFailure, "append-only line must not contain a newline"};
    }
    std::string buffer{line};
    buffer.push_back('\n');
    std::size_t written{0};
    while (written < buffer.size()) {
        const ssize_t n{::write(fd_, buffer.data() + written, buffer.size() - written)};
        if (n < 0) {
            if (errno == EINTR) continue;
            storage_failure("cannot write", path_);
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fsync(fd_) != 0) storage_failure("cannot fsync", path_);
}

}  // namespace ledgerseal
