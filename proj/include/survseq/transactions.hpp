#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "survseq/dates.hpp"

namespace survseq {

// One raw purchase row.
struct TransactionRecord {
    std::string customer_id;
    std::int64_t order_no = 0;
    Date purchase_date{};
};

// A customer's ordered inter-arrival times in days. `observed[j] == 1` marks
// a fully observed gap; the final entry is always the censored time from the
// last purchase to the analysis date (flag 0).
struct CustomerSequence {
    std::string customer_id;
    std::vector<double> times;
    std::vector<std::uint8_t> observed;

    std::size_t size() const { return times.size(); }
    // Time since the last purchase (the censored tail).
    double recency() const { return times.back(); }
    std::size_t observed_count() const;
};

// Fixed-length training window: real entries occupy the suffix, pads are
// zero-valued with mask 0. `target` is the inter-arrival time immediately
// following the window in the source sequence.
struct PaddedExample {
    std::string customer_id;
    std::vector<double> window;
    std::vector<std::uint8_t> mask;
    double target = 0.0;
    bool target_observed = false;
};

// Reads `customer_id,order_no,purchase_date` CSV. Rows come back in file
// order. Malformed rows raise errors naming the line number.
std::vector<TransactionRecord> ingest(std::istream& in);
std::vector<TransactionRecord> ingest_file(const std::string& path);

void write_transactions_csv(std::ostream& out, const std::vector<TransactionRecord>& records);

// Groups records per customer, sorts by (date, order_no), and emits the gap
// sequence plus the censored tail. Output is sorted by customer_id, so any
// permutation of the input rows produces identical output.
std::vector<CustomerSequence> build_sequences(std::vector<TransactionRecord> records, Date analysis_date);

// Stride-1 sliding windows over the sequence: a sequence of length m yields
// m-1 examples (every entry except the first serves once as target).
std::vector<PaddedExample> make_windows(const CustomerSequence& seq, int s);

// Window over the last s entries of the full sequence, censored tail
// included; used at serving. No target exists: the tail doubles as a
// sentinel target with target_observed = false.
PaddedExample serving_window(const CustomerSequence& seq, int s);

// Lifts observed gaps below eps (same-day repeat purchases) up to eps so the
// exponential likelihood stays away from t = 0. The censored tail is left
// untouched.
void clamp_small_gaps(CustomerSequence& seq, double eps);
void clamp_small_gaps(std::vector<CustomerSequence>& seqs, double eps);

// JSON-lines persistence: {"customer_id": ..., "times": [...], "observed": [...]}.
void write_sequences_jsonl(std::ostream& out, const std::vector<CustomerSequence>& seqs);
std::vector<CustomerSequence> read_sequences_jsonl(std::istream& in);
std::vector<CustomerSequence> read_sequences_file(const std::string& path);

} // namespace survseq
