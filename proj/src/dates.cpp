#include "survseq/dates.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace survseq {

namespace {
bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
} // namespace

Date parse_date(std::string_view text) {
    const auto fail = [&]() -> Date {
        throw std::runtime_error("invalid ISO-8601 date '" + std::string(text) + "' (expected YYYY-MM-DD)");
    };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return fail();
    std::string_view ys = text.substr(0, 4), ms = text.substr(5, 2), ds = text.substr(8, 2);
    if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) return fail();
    const int y = std::stoi(std::string(ys));
    const unsigned m = static_cast<unsigned>(std::stoi(std::string(ms)));
    const unsigned d = static_cast<unsigned>(std::stoi(std::string(ds)));
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) return fail();
    return std::chrono::sys_days{ymd};
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace survseq
