#pragma once

#include "sanctionflow/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>

namespace sanctionflow {

// ---------------------------------------------------------------------------
// Transactions (line-delimited JSON)
// ---------------------------------------------------------------------------

/// Parses NDJSON transaction records in file order and validates every
/// TxRecord invariant (hex txid, unique txid, non-empty outputs, fee >= 0).
/// Errors carry the 1-based line number. threads == 0 means one worker per
/// hardware thread; the result is identical for any worker count.
std::vector<TxRecord> parse_transactions(std::istream& in, unsigned threads = 1);
std::vector<TxRecord> parse_transactions_file(const std::filesystem::path& path,
                                              unsigned threads = 1);

/// Canonical one-line rendering: {"txid":...,"timestamp":...,"inputs":[...],
/// "outputs":[...]} with no spaces. parse(serialize(r)) == r for any valid
/// record, and serialize(parse(f)) == f for files written in canonical form.
void serialize_transaction(const TxRecord& tx, std::string& out);
std::string serialize_transactions(std::span<const TxRecord> txs);

// ---------------------------------------------------------------------------
// SDN list, prices, labels (CSV)
// ---------------------------------------------------------------------------

/// Columns: entity_id,name,kind,country,sanction_date,violation,currency,address.
/// Only XBT rows are retained; rows of one entity_id are grouped (violations
/// unioned, addresses deduplicated). Entities are returned sorted by entity_id.
std::vector<SanctionedEntity> parse_sdn_list(std::istream& in, std::string source_name);
std::vector<SanctionedEntity> parse_sdn_list_file(const std::filesystem::path& path);

/// Columns: date,usd_per_btc. Gaps are carry-forward filled (see
/// PriceTable::filled_days). Prices may carry at most six decimal places.
PriceTable parse_price_table(std::istream& in, std::string source_name);
PriceTable parse_price_table_file(const std::filesystem::path& path);

/// Columns: address,entity,category. Exact duplicate rows are tolerated,
/// conflicting relabels throw.
LabelSet parse_labels(std::istream& in, std::string source_name);
LabelSet parse_labels_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Transaction index
// ---------------------------------------------------------------------------

/// One (transaction, role) incidence of an address. Values of several edges
/// with the same role inside one transaction are merged into one event.
struct AddressEvent {
    Timestamp timestamp = 0;
    Satoshi value = 0;
    std::uint32_t tx_ordinal = 0; // position in the owning index's record list
    EdgeRole role = EdgeRole::Input;
};

/// Immutable lookup structure over a validated record list: txid -> record
/// and address -> time-ordered incidence history. Safe for concurrent reads.
class TxIndex {
public:
    TxIndex() = default;

    /// threads == 0 means one worker per hardware thread. The result does not
    /// depend on the worker count.
    static TxIndex build(std::vector<TxRecord> records, unsigned threads = 1);

    std::size_t tx_count() const { return records_.size(); }
    const TxRecord& record(std::uint32_t ordinal) const { return records_[ordinal]; }
    std::span<const TxRecord> records() const { return records_; }
    const TxRecord* find_tx(std::string_view txid) const;

    /// Sorted by (timestamp, txid); empty for unknown addresses.
    std::span<const AddressEvent> history(std::string_view address) const;

    std::size_t address_count() const { return by_address_.size(); }
    Timestamp min_timestamp() const { return min_ts_; } // 0 when empty
    Timestamp max_timestamp() const { return max_ts_; } // 0 when empty

    template <typename Fn>
    void for_each_address(Fn&& fn) const {
        for (const auto& [addr, events] : by_address_) fn(addr, std::span<const AddressEvent>(events));
    }

private:
    std::vector<TxRecord> records_;
    std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> by_txid_;
    std::unordered_map<std::string, std::vector<AddressEvent>, StringHash, std::equal_to<>>
        by_address_;
    Timestamp min_ts_ = 0;
    Timestamp max_ts_ = 0;
};

} // namespace sanctionflow
