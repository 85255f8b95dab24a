#include "sanctionflow/types.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>

namespace sanctionflow {

// ---------------------------------------------------------------------------
// Date
// ---------------------------------------------------------------------------

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) {
        throw InputError("invalid calendar date: " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    }
    const std::chrono::sys_days sd{ymd};
    return from_days(static_cast<std::int32_t>(sd.time_since_epoch().count()));
}

Date Date::parse(std::string_view iso) {
    // Strict "YYYY-MM-DD".
    auto bad = [&] { return InputError("unparseable date: '" + std::string(iso) + "'"); };
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') throw bad();
    int y = 0;
    unsigned m = 0, d = 0;
    auto num = [&](std::string_view s, auto& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && p == s.data() + s.size();
    };
    if (!num(iso.substr(0, 4), y) || !num(iso.substr(5, 2), m) || !num(iso.substr(8, 2), d)) {
        throw bad();
    }
    return from_ymd(y, m, d);
}

Date Date::of_timestamp(Timestamp ts) {
    // Floor division so pre-1970 instants land on the correct day.
    Timestamp days = ts / 86400;
    if (ts % 86400 < 0) --days;
    return from_days(static_cast<std::int32_t>(days));
}

std::string Date::iso() const {
    const std::chrono::sys_days sd{std::chrono::days{days_}};
    const std::chrono::year_month_day ymd{sd};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

// ---------------------------------------------------------------------------
// Usd
// ---------------------------------------------------------------------------

std::string Usd::fixed2() const {
    __int128 r = raw_;
    const bool neg = r < 0;
    if (neg) r = -r;
    // 1 cent = 1e12 raw units; round half up.
    const __int128 cents = (r + 500'000'000'000LL) / 1'000'000'000'000LL;
    const auto whole = static_cast<unsigned long long>(cents / 100);
    const auto frac = static_cast<unsigned>(cents % 100);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%llu.%02u", neg ? "-" : "", whole, frac);
    return buf;
}

// ---------------------------------------------------------------------------
// Token tables
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, kViolationCount> kViolationTokens = {
    "CYBER2", "DPRK3",  "DPRK4", "ELECTION", "IFSR", "ILLICIT-DRUGS",
    "IRGC",   "NPWMD",  "RUSSIA", "SDGT",    "SDNTK",
};

constexpr std::array<std::string_view, kCategoryCount> kCategoryTokens = {
    "Exchange",   "Gambling",   "Marketplace", "MiningPool",
    "Mixer",      "Service",    "Trading",     "EWallet",
    "Ransomware", "Sextortion", "Extremism",   "OfacSanctioned",
};

constexpr std::array<std::string_view, 2> kKindTokens = {"Individual", "Company"};

constexpr std::array<std::string_view, 3> kDirectionTokens = {"forward", "backward", "both"};

constexpr std::array<std::string_view, kWindowCount> kWindowTokens = {
    "PreSanction", "Post7", "Post30", "UpToDate"};

constexpr std::array<std::string_view, kBucketCount> kBucketTokens = {
    "0", "0.0-0.1", "0.1-1", "1-10", "10-50", "50+"};

template <typename E, std::size_t N>
std::optional<E> from_token(const std::array<std::string_view, N>& table, std::string_view s) {
    for (std::size_t i = 0; i < N; ++i) {
        if (table[i] == s) return static_cast<E>(i);
    }
    return std::nullopt;
}

} // namespace

std::string_view to_token(ViolationCode v) { return kViolationTokens[static_cast<std::size_t>(v)]; }
std::string_view to_token(BehaviourCategory c) { return kCategoryTokens[static_cast<std::size_t>(c)]; }
std::string_view to_token(EntityKind k) { return kKindTokens[static_cast<std::size_t>(k)]; }
std::string_view to_token(Direction d) { return kDirectionTokens[static_cast<std::size_t>(d)]; }
std::string_view to_token(WindowLabel w) { return kWindowTokens[static_cast<std::size_t>(w)]; }
std::string_view to_token(BalanceBucket b) { return kBucketTokens[static_cast<std::size_t>(b)]; }

std::optional<ViolationCode> violation_from_token(std::string_view s) {
    return from_token<ViolationCode>(kViolationTokens, s);
}
std::optional<BehaviourCategory> category_from_token(std::string_view s) {
    return from_token<BehaviourCategory>(kCategoryTokens, s);
}
std::optional<EntityKind> kind_from_token(std::string_view s) {
    return from_token<EntityKind>(kKindTokens, s);
}
std::optional<Direction> direction_from_token(std::string_view s) {
    return from_token<Direction>(kDirectionTokens, s);
}
std::optional<WindowLabel> window_label_from_token(std::string_view s) {
    return from_token<WindowLabel>(kWindowTokens, s);
}

// ---------------------------------------------------------------------------
// TxRecord / SanctionedEntity
// ---------------------------------------------------------------------------

Satoshi TxRecord::input_total() const {
    Satoshi s = 0;
    for (const auto& e : inputs) s += e.value;
    return s;
}

Satoshi TxRecord::output_total() const {
    Satoshi s = 0;
    for (const auto& e : outputs) s += e.value;
    return s;
}

Satoshi TxRecord::fee() const {
    if (is_coinbase()) return 0;
    return input_total() - output_total();
}

bool SanctionedEntity::has_violation(ViolationCode v) const {
    return std::find(violations.begin(), violations.end(), v) != violations.end();
}

bool SanctionedEntity::has_address(std::string_view a) const {
    return std::binary_search(addresses.begin(), addresses.end(), a);
}

// ---------------------------------------------------------------------------
// PriceTable
// ---------------------------------------------------------------------------

PriceTable PriceTable::from_rows(std::vector<std::pair<Date, PriceMicroUsd>> rows) {
    PriceTable t;
    if (rows.empty()) return t;
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].first == rows[i + 1].first) {
            throw InputError("duplicate price date: " + rows[i].first.iso());
        }
    }
    for (const auto& [d, p] : rows) {
        if (p <= 0) throw InputError("non-positive price on " + d.iso());
    }

    t.first_ = rows.front().first;
    const auto span = static_cast<std::size_t>(rows.back().first.days_since_epoch() -
                                               rows.front().first.days_since_epoch()) + 1;
    t.by_day_.reserve(span);
    std::size_t next = 0;
    for (std::size_t i = 0; i < span; ++i) {
        const Date d = t.first_.plus_days(static_cast<int>(i));
        if (next < rows.size() && rows[next].first == d) {
            t.by_day_.push_back(rows[next].second);
            ++next;
        } else {
            t.by_day_.push_back(t.by_day_.back()); // carry forward
            t.filled_.push_back(d);
        }
    }
    return t;
}

PriceMicroUsd PriceTable::at(Date d) const {
    if (!covers(d)) {
        throw InputError("no price for day " + d.iso() +
                         (empty() ? " (empty price table)"
                                  : " (table covers " + first_day().iso() + ".." +
                                        last_day().iso() + ")"));
    }
    return by_day_[static_cast<std::size_t>(d.days_since_epoch() - first_.days_since_epoch())];
}

// ---------------------------------------------------------------------------
// LabelSet
// ---------------------------------------------------------------------------

bool LabelSet::insert(std::string address, LabelInfo info) {
    auto [it, created] = map_.try_emplace(std::move(address), std::move(info));
    if (!created) {
        if (it->second == info) return false;
        throw InputError("conflicting label for address '" + it->first + "': (" +
                         it->second.entity + ", " + std::string(to_token(it->second.category)) +
                         ") vs (" + info.entity + ", " + std::string(to_token(info.category)) +
                         ")");
    }
    return true;
}

const LabelInfo* LabelSet::find(std::string_view address) const {
    auto it = map_.find(address);
    return it == map_.end() ? nullptr : &it->second;
}

std::vector<std::string> LabelSet::apply_sdn_overrides(
    std::span<const SanctionedEntity> entities) {
    std::vector<std::string> overlaps;
    for (const auto& e : entities) {
        for (const auto& a : e.addresses) {
            auto it = map_.find(a);
            if (it != map_.end()) {
                it->second.category = BehaviourCategory::OfacSanctioned;
                overlaps.push_back(a);
            }
        }
    }
    std::sort(overlaps.begin(), overlaps.end());
    return overlaps;
}

} // namespace sanctionflow
