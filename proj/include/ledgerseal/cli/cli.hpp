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


#ifndef LEDGERSEAL_CLI_CLI_HPP_
#define LEDGERSEAL_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include <ledgerseal/api/config.hpp>

namespace ledgerseal::cli {

// Exit codes. Schedulers rely on these values; do not renumber.
inline constexpr int kExitOk{0};
inline constexpr int kExitVerdict{1};  // mismatch, missing record, duplicate uid
inline constexpr int kExitUsage{2};
inline constexpr int kExitRuntime{3};

//! Runs one command. args excludes the program name. JSON results go to out,
//! diagnostics to err. env stands in for the process environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const api::EnvMap& env);

}  // namespace ledgerseal::cli

#endif  // LEDGERSEAL_CLI_CLI_HPP_
