#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace survseq {

// Calendar dates at day resolution. All arithmetic is done on day counts
// since the civil epoch; no timezone handling.
using Date = std::chrono::sys_days;

// Parses strict ISO-8601 "YYYY-MM-DD". Throws std::runtime_error naming the
// offending value on any malformed or non-existent date.
Date parse_date(std::string_view text);

std::string format_date(Date d);

inline long days_between(Date from, Date to) {
    return (to - from).count();
}

inline Date add_days(Date d, long days) {
    return d + std::chrono::days{days};
}

} // namespace survseq
