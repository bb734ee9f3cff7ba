#include "trendtrace/dates.hpp"

#include "trendtrace/errors.hpp"

#include <cstdio>

namespace trendtrace {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

Date make_date(std::string_view text, int y, int m, int d) {
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) throw Error("invalid calendar date '" + std::string(text) + "'");
    return std::chrono::sys_days{ymd};
}

} // namespace

Date parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw Error("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    const auto ys = text.substr(0, 4);
    const auto ms = text.substr(5, 2);
    const auto ds = text.substr(8, 2);
    if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds))
        throw Error("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    return make_date(text, to_int(ys), to_int(ms), to_int(ds));
}

std::string format_date(Date day) {
    const std::chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::int64_t parse_timestamp(std::string_view text) {
    // YYYY-MM-DDThh:mm:ss[.frac]Z
    if (text.size() < 20 || text.back() != 'Z' || text[10] != 'T' || text[13] != ':' ||
        text[16] != ':')
        throw Error("invalid timestamp '" + std::string(text) +
                    "', expected YYYY-MM-DDThh:mm:ssZ");
    const Date day = parse_date(text.substr(0, 10));
    const auto hs = text.substr(11, 2);
    const auto ms = text.substr(14, 2);
    const auto ss = text.substr(17, 2);
    if (!all_digits(hs) || !all_digits(ms) || !all_digits(ss))
        throw Error("invalid time in timestamp '" + std::string(text) + "'");
    const int h = to_int(hs);
    const int mi = to_int(ms);
    const int s = to_int(ss);
    if (h > 23 || mi > 59 || s > 59)
        throw Error("time of day out of range in '" + std::string(text) + "'");
    const auto frac = text.substr(19, text.size() - 20);
    if (!frac.empty()) {
        if (frac[0] != '.' || frac.size() < 2 || !all_digits(frac.substr(1)))
            throw Error("invalid fractional seconds in '" + std::string(text) + "'");
    }
    const std::int64_t days = day.time_since_epoch().count();
    return days * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_timestamp(std::int64_t ts) {
    std::int64_t days = ts / 86400;
    std::int64_t rem = ts % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    const Date day{std::chrono::days{days}};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02dZ", format_date(day).c_str(),
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

Date day_of(std::int64_t ts) {
    std::int64_t days = ts / 86400;
    if (ts % 86400 < 0) days -= 1;
    return Date{std::chrono::days{days}};
}

bool is_weekend(Date day) {
    const std::chrono::weekday wd{day};
    return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

} // namespace trendtrace
