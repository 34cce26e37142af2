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

#include <ledgerseal/ledger/address.hpp>

#include <algorithm>

namespace ledgerseal {

std::optional<Address> Address::from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.size() != kSize * 2) return std::nullopt;
    const auto bytes{ledgerseal::from_hex(hex)};
    if (!bytes) return std::nullopt;
    std::array<uint8_t, kSize> raw{};
    std::copy(bytes->begin(), bytes->end(), raw.begin());
    return Address{raw};
}

}  // namespace ledgerseal
