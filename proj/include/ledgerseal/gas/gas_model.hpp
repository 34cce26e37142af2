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

#ifndef LEDGERSEAL_GAS_GAS_MODEL_HPP_
#define LEDGERSEAL_GAS_GAS_MODEL_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ledgerseal::gas {

inline constexpr uint64_t kDefaultBaseGas{20'000};
inline constexpr uint64_t kDefaultGasPerByte{16};
inline constexpr double kWeiPerGwei{1e-9};

//! Flat calldata storage cost: base + per_byte * n. No zero-byte discount.
struct GasSchedule {
    uint64_t base{kDefaultBaseGas};
    uint64_t per_byte{kDefaultGasPerByte};

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

struct NetworkPricing {
    std::string name;
    double gas_price_gwei{0};  // 1 gwei = 1e-9 native token
    double token_usd{0};       // USD per native token

    friend bool operator==(const NetworkPricing&, const NetworkPricing&) = default;
};

struct GasQuote {
    std::string network;
    uint64_t n_bytes{0};
    uint64_t gas_units{0};
    double native_cost{0};
    double usd_cost{0};
};

//! Throws Error{kInvalidInput} if the result would overflow 64 bits.
uint64_t estimate_gas(const GasSchedule& schedule, uint64_t n_bytes);

GasQuote quote_usd(const GasSchedule& schedule, const NetworkPricing& pricing, uint64_t n_bytes);

//! record_count * quote_usd(...).usd_cost
double batch_projection(const GasSchedule& schedule, const NetworkPricing& pricing, uint64_t record_count,
                        uint64_t n_bytes);

struct SizeComparison {
    uint64_t n_bytes{0};
    std::vector<GasQuote> quotes;  // one per network, in input order
    double savings_percent{0};     // 100 * (1 - min_usd / max_usd)
    std::string cheapest;
    std::string most_expensive;
};

struct ComparisonReport {
    GasSchedule schedule;
    std::vector<SizeComparison> rows;

    //! Header "size_bytes,network,gas_units,native_cost,usd_cost,savings_percent"; one line per
    //! size x network. native_cost has 12 decimals, usd_cost 4, savings_percent (per size) 2.
    [[nodiscard]] std::string to_csv() const;

    //! Compact JSON mirror of the CSV plus per-size savings.
    [[nodiscard]] std::string to_json() const;
};

//! Throws Error{kInvalidInput} with fewer than two networks or no sizes.
ComparisonReport compare(const GasSchedule& schedule, std::span<const NetworkPricing> networks,
                         std::span<const uint64_t> sizes);

std::string format_usd(double usd);

//! "500,1000,2000" -> {500, 1000, 2000}. Empty text gives an empty list.
//! Throws Error{kInvalidInput} for anything but comma-separated positive integers.
std::vector<uint64_t> parse_size_list(std::string_view text);

//! Default report sizes.
inline constexpr uint64_t kReferenceSizes[]{500, 1000, 2000, 5000};

/// Versioned pricing snapshot:
///   {"version": "...", "schedule": {"base", "per_byte"},
///    "networks": [{"name", "gas_price_gwei", "token_usd"}]}
struct PricingConfig {
    std::string version;
    GasSchedule schedule;
    std::vector<NetworkPricing> networks;

    //! Throws Error{kInvalidInput} on malformed JSON, missing fields or non-positive prices.
    static PricingConfig parse(std::string_view json_text);

    //! Throws Error{kConfigError} if the file cannot be read, otherwise as parse().
    static PricingConfig load(const std::filesystem::path& path);

    //! Compiled-in copy of config/pricing.json.
    static PricingConfig defaults();

    [[nodiscard]] const NetworkPricing* find(std::string_view name) const noexcept;
};

}  // namespace ledgerseal::gas

#endif  // LEDGERSEAL_GAS_GAS_MODEL_HPP_
