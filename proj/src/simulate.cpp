#include "survseq/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace survseq {

double Rng::normal(double mean, double stddev) {
    // Box-Muller; caches the second variate.
    if (have_spare_) {
        have_spare_ = false;
        return mean + stddev * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return mean + stddev * r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be > 0");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_string(const std::string& s, std::uint64_t seed) {
    // FNV-1a folded with the seed through the splitmix finalizer.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(h ^ mix64(seed));
}

void SimConfig::validate() const {
    if (n_customers <= 0) throw std::runtime_error("sim config: n_customers must be positive");
    if (rate_floor <= 0.0) throw std::runtime_error("sim config: rate_floor must be positive");
    if (stop_prob < 0.0 || stop_prob > 1.0) throw std::runtime_error("sim config: stop_prob must lie in [0,1]");
    if (horizon_days <= 0.0) throw std::runtime_error("sim config: horizon_days must be positive");
    if (sigma < 0.0) throw std::runtime_error("sim config: sigma must be non-negative");
}

SimResult simulate(const SimConfig& config) {
    config.validate();
    SimResult result;
    result.base_date = parse_date("2020-01-01");
    result.customers.reserve(static_cast<std::size_t>(config.n_customers));

    int id_width = 1;
    for (std::int64_t v = config.n_customers; v > 0; v /= 10) ++id_width;

    for (std::int64_t k = 0; k < config.n_customers; ++k) {
        Rng rng(mix64(config.seed ^ mix64(static_cast<std::uint64_t>(k) + 0x51ed2701ULL)));
        SimCustomer cust;
        char buf[32];
        std::snprintf(buf, sizeof buf, "c%0*lld", id_width, static_cast<long long>(k + 1));
        cust.customer_id = buf;
        cust.true_rate = std::max(config.rate_floor, rng.normal(config.mu, config.sigma));

        double day = rng.uniform(0.0, config.horizon_days / 2.0);
        cust.purchase_days.push_back(day);
        for (;;) {
            if (rng.uniform() < config.stop_prob) {
                cust.churned = true;
                break;
            }
            const double gap = rng.exponential(cust.true_rate);
            if (day + gap >= config.horizon_days) break; // ran out of observation window
            day += gap;
            cust.purchase_days.push_back(day);
        }
        result.customers.push_back(std::move(cust));
    }

    for (const auto& cust : result.customers) {
        std::int64_t order = 0;
        for (double d : cust.purchase_days) {
            TransactionRecord rec;
            rec.customer_id = cust.customer_id;
            rec.order_no = order++;
            rec.purchase_date = add_days(result.base_date, static_cast<long>(std::floor(d)));
            result.transactions.push_back(std::move(rec));
        }
    }
    return result;
}

SimSummary sim_summary(const std::vector<SimCustomer>& customers) {
    if (customers.empty()) throw std::runtime_error("sim_summary: empty customer list");
    SimSummary s;
    s.n_customers = customers.size();
    std::vector<std::size_t> counts;
    counts.reserve(customers.size());
    double total_gap = 0.0;
    std::size_t n_gaps = 0;
    std::size_t churned = 0;
    for (const auto& c : customers) {
        counts.push_back(c.purchase_days.size());
        for (std::size_t i = 1; i < c.purchase_days.size(); ++i) {
            total_gap += c.purchase_days[i] - c.purchase_days[i - 1];
            ++n_gaps;
        }
        if (c.churned) ++churned;
    }
    double total_purchases = 0.0;
    for (auto c : counts) total_purchases += static_cast<double>(c);
    s.mean_purchases = total_purchases / static_cast<double>(counts.size());
    std::sort(counts.begin(), counts.end());
    s.median_purchases = static_cast<double>(counts[(counts.size() - 1) / 2]); // lower median
    s.mean_observed_gap = n_gaps ? total_gap / static_cast<double>(n_gaps) : 0.0;
    s.observed_gap_count = n_gaps;
    s.churn_fraction = static_cast<double>(churned) / static_cast<double>(customers.size());
    return s;
}

void write_truth_csv(std::ostream& out, const std::vector<SimCustomer>& customers) {
    out << "customer_id,true_rate,churned\n";
    char buf[64];
    for (const auto& c : customers) {
        std::snprintf(buf, sizeof buf, "%.12g", c.true_rate);
        out << c.customer_id << ',' << buf << ',' << (c.churned ? 1 : 0) << '\n';
    }
}

} // namespace survseq
