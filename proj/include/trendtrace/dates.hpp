#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace trendtrace {

/// Calendar day in UTC. All day boundaries in the pipeline are UTC days.
using Date = std::chrono::sys_days;

/// Parses "YYYY-MM-DD". Throws Error on anything else.
Date parse_date(std::string_view text);

/// Formats a date back to "YYYY-MM-DD".
std::string format_date(Date day);

/// Parses an ISO-8601 UTC instant "YYYY-MM-DDThh:mm:ssZ" to Unix seconds.
/// Fractional seconds are accepted and truncated. Throws Error otherwise.
std::int64_t parse_timestamp(std::string_view text);

/// Formats Unix seconds as "YYYY-MM-DDThh:mm:ssZ".
std::string format_timestamp(std::int64_t ts);

/// UTC calendar day containing the instant.
Date day_of(std::int64_t ts);

/// Saturday or Sunday.
bool is_weekend(Date day);

} // namespace trendtrace
