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

#include <ledgerseal/gas/gas_model.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include <ledgerseal/common/error.hpp>

namespace ledgerseal::gas {

using nlohmann::json;

namespace {

// Snapshot calibrated so that a 1000-byte record costs $1.70 on Ethereum and
// $0.0032 on Polygon (36,000 gas each). Keep in sync with config/pricing.json.
constexpr std::string_view kDefaultPricingJson{R"({
  "version": "2024-08-19",
  "schedule": {"base": 20000, "per_byte": 16},
  "networks": [
    {"name": "ethereum", "gas_price_gwei": 18.058, "token_usd": 2615.0},
    {"name": "polygon", "gas_price_gwei": 222.22, "token_usd": 0.40}
  ]
})"};

[[noreturn]] void invalid(const std::string& what) { throw Error{ErrorCode::kInvalidInput, what}; }

}  // namespace

uint64_t estimate_gas(const GasSchedule& schedule, uint64_t n_bytes) {
    constexpr uint64_t kMax{std::numeric_limits<uint64_t>::max()};
    if (schedule.per_byte != 0 && n_bytes > (kMax - schedule.base) / schedule.per_byte) {
        invalid("gas estimate overflows 64 bits");
    }
    return schedule.base + schedule.per_byte * n_bytes;
}

GasQuote quote_usd(const GasSchedule& schedule, const NetworkPricing& pricing, uint64_t n_bytes) {
    GasQuote quote{pricing.name, n_bytes, estimate_gas(schedule, n_bytes), 0, 0};
    quote.native_cost = static_cast<double>(quote.gas_units) * pricing.gas_price_gwei * kWeiPerGwei;
    quote.usd_cost = quote.native_cost * pricing.token_usd;
    return quote;
}

double batch_projection(const GasSchedule& schedule, const NetworkPricing& pricing, uint64_t record_count,
                        uint64_t n_bytes) {
    return static_cast<double>(record_count) * quote_usd(schedule, pricing, n_bytes).usd_cost;
}

ComparisonReport compare(const GasSchedule& schedule, std::span<const NetworkPricing> networks,
                         std::span<const uint64_t> sizes) {
    if (networks.size() < 2) invalid("comparison needs at least two networks");
    if (sizes.empty()) invalid("comparison needs at least one size");

    ComparisonReport report{schedule, {}};
    report.rows.reserve(sizes.size());
    for (const uint64_t n : sizes) {
        SizeComparison row{n, {}, 0, {}, {}};
        for (const auto& net : networks) row.quotes.push_back(quote_usd(schedule, net, n));
        const auto [lo, hi] = std::minmax_element(row.quotes.begin(), row.quotes.end(),
                                                  [](const auto& a, const auto& b) { return a.usd_cost < b.usd_cost; });
        row.cheapest = lo->network;
        row.most_expensive = hi->network;
        row.savings_percent = hi->usd_cost > 0 ? 100.0 * (1.0 - lo->usd_cost / hi->usd_cost) : 0.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_usd(double usd) { return fmt::format("{:.4f}", usd); }

std::vector<uint64_t> parse_size_list(std::string_view text) {
    std::vector<uint64_t> sizes;
    if (text.empty()) return sizes;
    while (true) {
        const auto comma{text.find(',')};
        const std::string_view item{text.substr(0, comma)};
        uint64_t value{0};
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
            invalid("sizes must be a comma-separated list of positive integers");
        }
        sizes.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return sizes;
}

std::string ComparisonReport::to_csv() const {
    std::string out{"size_bytes,network,gas_units,native_cost,usd_cost,savings_percent\n"};
    for (const auto& row : rows) {
        for (const auto& q : row.quotes) {
            out += fmt::format("{},{},{},{:.12f},{},{:.2f}\n", q.n_bytes, q.network, q.gas_units, q.native_cost,
                               format_usd(q.usd_cost), row.savings_percent);
        }
    }
    return out;
}

std::string ComparisonReport::to_json() const {
    json sizes_json = json::array();
    for (const auto& row : rows) {
        json quotes = json::array();
        for (const auto& q : row.quotes) {
            quotes.push_back({{"network", q.network},
                              {"gas_units", q.gas_units},
                              {"native_cost", q.native_cost},
                              {"usd_cost", q.usd_cost},
                              {"usd", format_usd(q.usd_cost)}});
        }
        sizes_json.push_back({{"size_bytes", row.n_bytes},
                              {"quotes", std::move(quotes)},
                              {"savings_percent", row.savings_percent},
                              {"cheapest", row.cheapest},
                              {"most_expensive", row.most_expensive}});
    }
    const json doc{{"schedule", {{"base", schedule.base}, {"per_byte", schedule.per_byte}}},
                   {"sizes", std::move(sizes_json)}};
    return doc.dump();
}

PricingConfig PricingConfig::parse(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        invalid(std::string{"pricing config is not valid JSON: "} + e.what());
    }
    try {
        PricingConfig config;
        config.version = doc.value("version", "");
        if (const auto it = doc.find("schedule"); it != doc.end()) {
            config.schedule.base = it->at("base").get<uint64_t>();
            config.schedule.per_byte = it->at("per_byte").get<uint64_t>();
        }
        for (const auto& net : doc.at("networks")) {
            NetworkPricing pricing{net.at("name").get<std::string>(), net.at("gas_price_gwei").get<double>(),
                                   net.at("token_usd").get<double>()};
            if (pricing.name.empty()) invalid("network name must not be empty");
            if (!(pricing.gas_price_gwei > 0) || !(pricing.token_usd > 0)) {
                invalid("network '" + pricing.name + "' must have positive prices");
            }
            config.networks.push_back(std::move(pricing));
        }
        return config;
    } catch (const json::exception& e) {
        invalid(std::string{"pricing config: "} + e.what());
    }
}

PricingConfig PricingConfig::load(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) throw Error{ErrorCode::kConfigError, "cannot read pricing config " + path.string()};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

PricingConfig PricingConfig::defaults() { return parse(kDefaultPricingJson); }

const NetworkPricing* PricingConfig::find(std::string_view name) const noexcept {
    const auto it{std::find_if(networks.begin(), networks.end(), [&](const auto& n) { return n.name == name; })};
    return it == networks.end() ? nullptr : &*it;
}

}  // namespace ledgerseal::gas
