#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "survseq/transactions.hpp"

namespace survseq {

// Deterministic RNG: the engine is the standard-specified mt19937_64 and all
// distribution transforms are explicit, so identical seeds give identical
// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 usable bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }
    double normal(double mean, double stddev);
    // Uniform integer in [0, n) by rejection; n must be > 0.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable 64-bit mix used for per-customer sub-seeds and split hashing.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_string(const std::string& s, std::uint64_t seed);

struct SimConfig {
    std::int64_t n_customers = 0;
    double mu = 0.08;
    double sigma = 0.02;
    double rate_floor = 0.01;
    double stop_prob = 0.15;
    double horizon_days = 365.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SimCustomer {
    std::string customer_id;
    double true_rate = 0.0;              // the rate the gaps were drawn from
    std::vector<double> purchase_days;   // real-valued days since simulation start
    bool churned = false;                // stopped purchasing before the horizon
};

struct SimResult {
    std::vector<SimCustomer> customers;
    std::vector<TransactionRecord> transactions; // day-resolution projection
    Date base_date{};                            // calendar date of simulation day 0
};

// Per customer: rate = max(rate_floor, Normal(mu, sigma^2)); first purchase
// uniform in the first half of the horizon; then repeat {stop with
// probability stop_prob (churn), else draw a gap ~ Exponential(rate) and
// keep the purchase if it lands before the horizon}. Deterministic under a
// fixed seed; customers are generated from independent sub-seeds.
SimResult simulate(const SimConfig& config);

struct SimSummary {
    std::size_t n_customers = 0;
    double mean_purchases = 0.0;
    double median_purchases = 0.0; // lower median
    double mean_observed_gap = 0.0;
    double churn_fraction = 0.0;
    std::size_t observed_gap_count = 0;
};

SimSummary sim_summary(const std::vector<SimCustomer>& customers);

void write_truth_csv(std::ostream& out, const std::vector<SimCustomer>& customers);

} // namespace survseq
