#include "survseq/survival.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace survseq {

ExponentialSurvival::ExponentialSurvival(double rate) : rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("ExponentialSurvival: rate must be positive and finite");
    }
}

double ExponentialSurvival::survival(double t) const {
    if (t < 0.0) throw std::invalid_argument("survival: t must be >= 0");
    return std::exp(-rate_ * t);
}

double ExponentialSurvival::density(double t) const {
    if (t < 0.0) throw std::invalid_argument("density: t must be >= 0");
    return rate_ * std::exp(-rate_ * t);
}

double ExponentialSurvival::quantile(double p) const {
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("quantile: p must lie in [0,1)");
    return -std::log1p(-p) / rate_;
}

double ExponentialSurvival::deferred(double t1, double t2) const {
    if (t1 < 0.0 || t1 > t2) throw std::invalid_argument("deferred: need 0 <= t1 <= t2");
    return survival(t1) - survival(t2);
}

ExponentialSurvival censored_exponential_mle(std::span<const double> times,
                                             std::span<const std::uint8_t> observed) {
    if (times.empty() || times.size() != observed.size()) {
        throw std::invalid_argument("censored_exponential_mle: need parallel non-empty times/observed");
    }
    double total = 0.0;
    std::size_t events = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw std::invalid_argument("censored_exponential_mle: negative time");
        total += times[i];
        if (observed[i]) ++events;
    }
    if (events == 0) throw std::runtime_error("censored_exponential_mle: rate unidentifiable (no observed events)");
    if (!(total > 0.0)) throw std::runtime_error("censored_exponential_mle: all times zero");
    return ExponentialSurvival(static_cast<double>(events) / total);
}

double StepSurvivalCurve::operator()(double t) const {
    // Largest knot <= t; 1 before the first knot, last value carried forward.
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    if (it == knots.begin()) return 1.0;
    return values[static_cast<std::size_t>(it - knots.begin()) - 1];
}

StepSurvivalCurve kaplan_meier(std::span<const double> times, std::span<const std::uint8_t> observed) {
    if (times.empty() || times.size() != observed.size()) {
        throw std::invalid_argument("kaplan_meier: need parallel non-empty times/observed");
    }
    struct Entry {
        double t;
        bool event;
    };
    std::vector<Entry> entries;
    entries.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw std::invalid_argument("kaplan_meier: negative time");
        entries.push_back({times[i], observed[i] != 0});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.t < b.t; });

    StepSurvivalCurve curve;
    double surv = 1.0;
    std::size_t at_risk = entries.size();
    std::size_t i = 0;
    while (i < entries.size()) {
        const double t = entries[i].t;
        std::size_t events = 0, total = 0;
        while (i < entries.size() && entries[i].t == t) {
            events += entries[i].event ? 1 : 0;
            ++total;
            ++i;
        }
        if (events > 0) {
            surv *= 1.0 - static_cast<double>(events) / static_cast<double>(at_risk);
            curve.knots.push_back(t);
            curve.values.push_back(surv);
        }
        at_risk -= total;
    }
    return curve;
}

StepSurvivalCurve per_customer_km(const CustomerSequence& seq) {
    if (seq.size() == 0) throw std::invalid_argument("per_customer_km: empty sequence");
    return kaplan_meier(seq.times, seq.observed);
}

StepSurvivalCurve censoring_distribution(std::span<const double> times, std::span<const std::uint8_t> observed) {
    std::vector<std::uint8_t> inverted(observed.size());
    for (std::size_t i = 0; i < observed.size(); ++i) inverted[i] = observed[i] ? 0 : 1;
    return kaplan_meier(times, inverted);
}

void write_curve_csv(std::ostream& out, const StepSurvivalCurve& curve) {
    out << "t,survival\n";
    char buf[64];
    for (std::size_t i = 0; i < curve.knots.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", curve.knots[i]);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.12g", curve.values[i]);
        out << buf << '\n';
    }
}

} // namespace survseq
