#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sanctionflow {

using Timestamp = std::int64_t; // seconds since Unix epoch, UTC
using Satoshi = std::uint64_t;  // 1e-8 BTC

inline constexpr Satoshi kSatPerBtc = 100'000'000ULL;

/// Bad input data: malformed files, inconsistent corpora, unknown tokens.
/// Maps to CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Maps to CLI exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Transparent hasher so unordered maps keyed by std::string accept
// string_view lookups without a temporary allocation.
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
    std::size_t operator()(const std::string& s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
    std::size_t operator()(const char* s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

// ---------------------------------------------------------------------------
// Calendar dates (UTC)
// ---------------------------------------------------------------------------

class Date {
public:
    Date() = default;

    static Date from_days(std::int32_t days) {
        Date d;
        d.days_ = days;
        return d;
    }
    static Date from_ymd(int year, unsigned month, unsigned day);
    /// Parses "YYYY-MM-DD"; throws InputError on anything else.
    static Date parse(std::string_view iso);
    /// UTC calendar day containing the given instant.
    static Date of_timestamp(Timestamp ts);

    std::int32_t days_since_epoch() const { return days_; }
    Timestamp midnight() const { return static_cast<Timestamp>(days_) * 86400; }
    std::string iso() const;
    Date plus_days(int n) const { return from_days(days_ + n); }

    friend auto operator<=>(Date, Date) = default;

private:
    std::int32_t days_ = 0; // days since 1970-01-01
};

// ---------------------------------------------------------------------------
// Exact USD amounts
// ---------------------------------------------------------------------------

/// USD per BTC scaled by 1e6. Price files carry at most six decimal places.
using PriceMicroUsd = std::int64_t;

/// Exact decimal USD amount. Internally an integer multiple of 1e-14 USD,
/// which keeps satoshi * micro-USD-per-BTC products exact; rounding happens
/// only when a report is rendered.
class Usd {
public:
    Usd() = default;

    static Usd from_sat(Satoshi sat, PriceMicroUsd price_micro) {
        Usd u;
        u.raw_ = static_cast<__int128>(sat) * static_cast<__int128>(price_micro);
        return u;
    }

    Usd& operator+=(Usd o) {
        raw_ += o.raw_;
        return *this;
    }
    friend Usd operator+(Usd a, Usd b) { return a += b; }
    friend bool operator==(Usd a, Usd b) { return a.raw_ == b.raw_; }
    friend auto operator<=>(Usd a, Usd b) { return a.raw_ <=> b.raw_; }

    bool is_zero() const { return raw_ == 0; }
    /// Two-decimal rendering, round half up. The only lossy step.
    std::string fixed2() const;
    double approx() const { return static_cast<double>(raw_) * 1e-14; }

private:
    __int128 raw_ = 0;
};

// ---------------------------------------------------------------------------
// Closed taxonomies
// ---------------------------------------------------------------------------

enum class ViolationCode : std::uint8_t {
    Cyber2,
    Dprk3,
    Dprk4,
    Election,
    Ifsr,
    IllicitDrugs,
    Irgc,
    Npwmd,
    Russia,
    Sdgt,
    Sdntk,
};
inline constexpr std::size_t kViolationCount = 11;

enum class BehaviourCategory : std::uint8_t {
    Exchange,
    Gambling,
    Marketplace,
    MiningPool,
    Mixer,
    Service,
    Trading,
    EWallet,
    Ransomware,
    Sextortion,
    Extremism,
    OfacSanctioned,
};
inline constexpr std::size_t kCategoryCount = 12;

enum class EntityKind : std::uint8_t { Individual, Company };

enum class Direction : std::uint8_t { Forward, Backward, Both };

enum class EdgeRole : std::uint8_t { Input, Output };

enum class WindowLabel : std::uint8_t { PreSanction, Post7, Post30, UpToDate };
inline constexpr std::size_t kWindowCount = 4;

/// Fig.-7 style balance ranges; the six buckets partition [0, inf).
enum class BalanceBucket : std::uint8_t {
    Zero,        // exactly 0
    UpToTenth,   // (0, 0.1] BTC
    TenthToOne,  // (0.1, 1] BTC
    OneToTen,    // (1, 10] BTC
    TenToFifty,  // (10, 50) BTC
    FiftyPlus,   // [50, inf) BTC
};
inline constexpr std::size_t kBucketCount = 6;

std::string_view to_token(ViolationCode);
std::string_view to_token(BehaviourCategory);
std::string_view to_token(EntityKind);
std::string_view to_token(Direction);
std::string_view to_token(WindowLabel);
std::string_view to_token(BalanceBucket);

std::optional<ViolationCode> violation_from_token(std::string_view);
std::optional<BehaviourCategory> category_from_token(std::string_view);
std::optional<EntityKind> kind_from_token(std::string_view);
std::optional<Direction> direction_from_token(std::string_view);
std::optional<WindowLabel> window_label_from_token(std::string_view);

// ---------------------------------------------------------------------------
// Core records
// ---------------------------------------------------------------------------

struct TxEdge {
    std::string address;
    Satoshi value = 0;

    bool operator==(const TxEdge&) const = default;
};

/// One confirmed transaction with already-resolved input addresses.
/// Inputs are empty only for coinbase transactions; outputs are never empty;
/// for non-coinbase records sum(inputs) - sum(outputs) is the fee, >= 0.
struct TxRecord {
    std::string txid; // 64 lowercase hex chars
    Timestamp timestamp = 0;
    std::vector<TxEdge> inputs;
    std::vector<TxEdge> outputs;

    bool is_coinbase() const { return inputs.empty(); }
    Satoshi input_total() const;
    Satoshi output_total() const;
    /// inputs - outputs; zero for coinbase.
    Satoshi fee() const;

    bool operator==(const TxRecord&) const = default;
};

struct SanctionedEntity {
    std::string entity_id;
    std::string name;
    EntityKind kind = EntityKind::Individual;
    std::string country;
    Date sanction_date;
    std::vector<ViolationCode> violations; // sorted, unique, non-empty
    std::vector<std::string> addresses;    // sorted, unique, non-empty

    bool has_violation(ViolationCode v) const;
    bool has_address(std::string_view a) const;
};

struct TimeWindow {
    WindowLabel label = WindowLabel::PreSanction;
    Timestamp start = 0; // inclusive
    Timestamp end = 0;   // exclusive

    bool contains(Timestamp ts) const { return ts >= start && ts < end; }
    bool operator==(const TimeWindow&) const = default;
};

// ---------------------------------------------------------------------------
// Daily BTC/USD prices
// ---------------------------------------------------------------------------

/// Gap-free daily price table over [first_day, last_day]. Gaps in the source
/// file are carry-forward filled and remembered for the load report.
class PriceTable {
public:
    PriceTable() = default;

    /// Rows need not be sorted; duplicate dates and non-positive prices throw.
    static PriceTable from_rows(std::vector<std::pair<Date, PriceMicroUsd>> rows);

    bool empty() const { return by_day_.empty(); }
    std::size_t day_count() const { return by_day_.size(); }
    Date first_day() const { return first_; }
    Date last_day() const { return first_.plus_days(static_cast<int>(by_day_.size()) - 1); }
    bool covers(Date d) const {
        return !by_day_.empty() && d >= first_day() && d <= last_day();
    }
    /// Throws InputError when the date falls outside the table.
    PriceMicroUsd at(Date d) const;
    PriceMicroUsd at_timestamp(Timestamp ts) const { return at(Date::of_timestamp(ts)); }

    /// Days whose price was carried forward from the previous day.
    const std::vector<Date>& filled_days() const { return filled_; }

private:
    Date first_;
    std::vector<PriceMicroUsd> by_day_;
    std::vector<Date> filled_;
};

// ---------------------------------------------------------------------------
// Address labels (tagpack)
// ---------------------------------------------------------------------------

struct LabelInfo {
    std::string entity;
    BehaviourCategory category = BehaviourCategory::Service;

    bool operator==(const LabelInfo&) const = default;
};

class LabelSet {
public:
    /// Returns false when the address is already present with the same info,
    /// throws InputError when it is present with conflicting info.
    bool insert(std::string address, LabelInfo info);

    const LabelInfo* find(std::string_view address) const;
    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }

    /// Re-categorizes addresses that also appear in the SDN list as
    /// OfacSanctioned and returns them, sorted, as the overlap report.
    std::vector<std::string> apply_sdn_overrides(std::span<const SanctionedEntity> entities);

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [addr, info] : map_) fn(addr, info);
    }

private:
    std::unordered_map<std::string, LabelInfo, StringHash, std::equal_to<>> map_;
};

} // namespace sanctionflow
