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

#ifndef LEDGERSEAL_COMMON_CLOCK_HPP_
#define LEDGERSEAL_COMMON_CLOCK_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

namespace ledgerseal {

using TimePoint = std::chrono::system_clock::time_point;

//! Injectable wall clock; tests pin it for reproducible files.
using Clock = std::function<TimePoint()>;

inline Clock system_clock() {
    return [] { return std::chrono::system_clock::now(); };
}

//! "YYYY-MM-DDTHH:MM:SSZ", UTC, whole seconds.
std::string format_rfc3339(TimePoint tp);

inline uint64_t unix_seconds(TimePoint tp) {
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(tp.time_since_epoch()).count());
}

}  // namespace ledgerseal

#endif  // LEDGERSEAL_COMMON_CLOCK_HPP_
