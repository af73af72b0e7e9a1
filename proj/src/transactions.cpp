#include "survseq/transactions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace survseq {

std::size_t CustomerSequence::observed_count() const {
    std::size_t n = 0;
    for (auto f : observed) n += f;
    return n;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::vector<TransactionRecord> ingest(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("transaction CSV: empty file");
    {
        auto header = split_csv_line(line);
        if (header != std::vector<std::string>{"customer_id", "order_no", "purchase_date"}) {
            throw std::runtime_error("transaction CSV: expected header 'customer_id,order_no,purchase_date', got '" + line + "'");
        }
    }
    std::vector<TransactionRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw std::runtime_error("transaction CSV line " + std::to_string(line_no) + ": expected 3 fields, got " +
                                     std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            throw std::runtime_error("transaction CSV line " + std::to_string(line_no) + ": empty customer_id");
        }
        TransactionRecord rec;
        rec.customer_id = fields[0];
        try {
            std::size_t pos = 0;
            rec.order_no = std::stoll(fields[1], &pos);
            if (pos != fields[1].size() || rec.order_no < 0) throw std::invalid_argument(fields[1]);
        } catch (const std::exception&) {
            throw std::runtime_error("transaction CSV line " + std::to_string(line_no) + ": bad order_no '" + fields[1] + "'");
        }
        try {
            rec.purchase_date = parse_date(fields[2]);
        } catch (const std::exception& e) {
            throw std::runtime_error("transaction CSV line " + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw std::runtime_error("transaction CSV: no data rows");
    return records;
}

std::vector<TransactionRecord> ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open transaction CSV '" + path + "'");
    return ingest(in);
}

void write_transactions_csv(std::ostream& out, const std::vector<TransactionRecord>& records) {
    out << "customer_id,order_no,purchase_date\n";
    for (const auto& r : records) {
        out << r.customer_id << ',' << r.order_no << ',' << format_date(r.purchase_date) << '\n';
    }
}

std::vector<CustomerSequence> build_sequences(std::vector<TransactionRecord> records, Date analysis_date) {
    if (records.empty()) throw std::runtime_error("build_sequences: no records");
    for (const auto& r : records) {
        if (r.purchase_date > analysis_date) {
            throw std::runtime_error("build_sequences: purchase on " + format_date(r.purchase_date) + " by '" +
                                     r.customer_id + "' is after the analysis date " + format_date(analysis_date));
        }
    }
    // std::map keeps customers in lexicographic order; together with the
    // (date, order_no) sort below this makes the output independent of input
    // row order.
    std::map<std::string, std::vector<const TransactionRecord*>> by_customer;
    for (const auto& r : records) by_customer[r.customer_id].push_back(&r);

    std::vector<CustomerSequence> out;
    out.reserve(by_customer.size());
    for (auto& [id, rows] : by_customer) {
        std::sort(rows.begin(), rows.end(), [](const TransactionRecord* a, const TransactionRecord* b) {
            if (a->purchase_date != b->purchase_date) return a->purchase_date < b->purchase_date;
            return a->order_no < b->order_no;
        });
        CustomerSequence seq;
        seq.customer_id = id;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            seq.times.push_back(static_cast<double>(days_between(rows[i - 1]->purchase_date, rows[i]->purchase_date)));
            seq.observed.push_back(1);
        }
        seq.times.push_back(static_cast<double>(days_between(rows.back()->purchase_date, analysis_date)));
        seq.observed.push_back(0);
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<PaddedExample> make_windows(const CustomerSequence& seq, int s) {
    if (s < 1) throw std::invalid_argument("make_windows: s must be >= 1");
    const std::size_t m = seq.size();
    std::vector<PaddedExample> out;
    if (m < 2) return out; // no trainable pair
    out.reserve(m - 1);
    for (std::size_t j = 1; j < m; ++j) {
        PaddedExample ex;
        ex.customer_id = seq.customer_id;
        ex.window.assign(static_cast<std::size_t>(s), 0.0);
        ex.mask.assign(static_cast<std::size_t>(s), 0);
        const std::size_t take = std::min<std::size_t>(j, static_cast<std::size_t>(s));
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t src = j - take + i; // 0-based index into times
            const std::size_t dst = static_cast<std::size_t>(s) - take + i;
            ex.window[dst] = seq.times[src];
            ex.mask[dst] = 1;
        }
        ex.target = seq.times[j];
        ex.target_observed = seq.observed[j] != 0;
        out.push_back(std::move(ex));
    }
    return out;
}

PaddedExample serving_window(const CustomerSequence& seq, int s) {
    if (s < 1) throw std::invalid_argument("serving_window: s must be >= 1");
    if (seq.size() == 0) throw std::invalid_argument("serving_window: empty sequence");
    PaddedExample ex;
    ex.customer_id = seq.customer_id;
    ex.window.assign(static_cast<std::size_t>(s), 0.0);
    ex.mask.assign(static_cast<std::size_t>(s), 0);
    const std::size_t m = seq.size();
    const std::size_t take = std::min<std::size_t>(m, static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t src = m - take + i;
        const std::size_t dst = static_cast<std::size_t>(s) - take + i;
        ex.window[dst] = seq.times[src];
        ex.mask[dst] = 1;
    }
    ex.target = seq.times.back();
    ex.target_observed = false;
    return ex;
}

void clamp_small_gaps(CustomerSequence& seq, double eps) {
    for (std::size_t i = 0; i < seq.times.size(); ++i) {
        if (seq.observed[i] && seq.times[i] < eps) seq.times[i] = eps;
    }
}

void clamp_small_gaps(std::vector<CustomerSequence>& seqs, double eps) {
    for (auto& s : seqs) clamp_small_gaps(s, eps);
}

void write_sequences_jsonl(std::ostream& out, const std::vector<CustomerSequence>& seqs) {
    for (const auto& s : seqs) {
        nlohmann::json j;
        j["customer_id"] = s.customer_id;
        j["times"] = s.times;
        j["observed"] = std::vector<int>(s.observed.begin(), s.observed.end());
        out << j.dump() << '\n';
    }
}

std::vector<CustomerSequence> read_sequences_jsonl(std::istream& in) {
    std::vector<CustomerSequence> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            throw std::runtime_error("sequences JSONL line " + std::to_string(line_no) + ": " + e.what());
        }
        CustomerSequence s;
        try {
            s.customer_id = j.at("customer_id").get<std::string>();
            s.times = j.at("times").get<std::vector<double>>();
            auto flags = j.at("observed").get<std::vector<int>>();
            s.observed.assign(flags.begin(), flags.end());
        } catch (const std::exception& e) {
            throw std::runtime_error("sequences JSONL line " + std::to_string(line_no) + ": " + e.what());
        }
        if (s.times.empty() || s.times.size() != s.observed.size()) {
            throw std::runtime_error("sequences JSONL line " + std::to_string(line_no) + ": times/observed length mismatch");
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CustomerSequence> read_sequences_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequences file '" + path + "'");
    return read_sequences_jsonl(in);
}

} // namespace survseq
