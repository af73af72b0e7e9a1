#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "survseq/transactions.hpp"

namespace survseq {

// Exponential time-to-event model with rate lambda: S(t) = exp(-lambda t).
class ExponentialSurvival {
public:
    explicit ExponentialSurvival(double rate);

    double rate() const { return rate_; }
    double survival(double t) const;                  // S(t),   t >= 0
    double density(double t) const;                   // f(t),   t >= 0
    double quantile(double p) const;                  // t with F(t) = p, p in [0,1)
    double deferred(double t1, double t2) const;      // S(t1) - S(t2), 0 <= t1 <= t2

private:
    double rate_;
};

// lambda_hat = (#observed events) / (sum of observed and censored times).
ExponentialSurvival censored_exponential_mle(std::span<const double> times,
                                             std::span<const std::uint8_t> observed);

// Right-continuous non-increasing step function: 1 before the first knot,
// `values[i]` on [knots[i], knots[i+1]), last value carried forward.
struct StepSurvivalCurve {
    std::vector<double> knots;  // strictly increasing drop times
    std::vector<double> values; // survival at/after each knot

    double operator()(double t) const;
    double last_value() const { return values.empty() ? 1.0 : values.back(); }
};

// Product-limit estimator. Ties are grouped; events at a time are processed
// before censorings at the same time (both stay in the risk set at t).
StepSurvivalCurve kaplan_meier(std::span<const double> times, std::span<const std::uint8_t> observed);

// Kaplan-Meier over one customer's own gaps (censored tail included).
StepSurvivalCurve per_customer_km(const CustomerSequence& seq);

// Kaplan-Meier of the censoring distribution G(t) = P(C > t): flags inverted.
StepSurvivalCurve censoring_distribution(std::span<const double> times, std::span<const std::uint8_t> observed);

void write_curve_csv(std::ostream& out, const StepSurvivalCurve& curve);

} // namespace survseq
