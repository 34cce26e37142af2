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

#ifndef LEDGERSEAL_LEDGER_ADDRESS_HPP_
#define LEDGERSEAL_LEDGER_ADDRESS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <ledgerseal/common/bytes.hpp>

namespace ledgerseal {

//! 20-byte account identifier, rendered as 0x-prefixed lowercase hex.
class Address {
  public:
    static constexpr std::size_t kSize{20};

    constexpr Address() = default;
    explicit constexpr Address(const std::array<uint8_t, kSize>& bytes) : bytes_{bytes} {}

    //! Exactly 40 hex digits with optional 0x prefix.
    static std::optional<Address> from_hex(std::string_view hex);

    [[nodiscard]] std::string to_hex() const { return ledgerseal::to_hex(bytes_, /*with_prefix=*/true); }
    [[nodiscard]] const std::array<uint8_t, kSize>& bytes() const noexcept { return bytes_; }

    friend constexpr auto operator<=>(const Address&, const Address&) = default;

  private:
    std::array<uint8_t, kSize> bytes_{};
};

}  // namespace ledgerseal

#endif  // LEDGERSEAL_LEDGER_ADDRESS_HPP_
