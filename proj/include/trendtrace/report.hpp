#pragma once

#include "trendtrace/aggregate.hpp"
#include "trendtrace/trends.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace trendtrace {

/// One keyword positioned by how many papers carry it (x) and how many
/// downloads each of those papers drew on average (y).
struct ScatterPoint {
    std::string keyword;
    std::size_t paper_count = 0;
    double ratio2 = 0.0;
    bool emerging = false;

    bool operator==(const ScatterPoint&) const = default;
};

struct ScatterData {
    std::vector<ScatterPoint> points;
    std::size_t skipped = 0; // entries without a defined ratio2
};

/// Projects trend entries onto scatter coordinates, preserving their order.
/// Entries with no ratio2 (zero matching papers) cannot be plotted and are
/// counted in `skipped` instead.
ScatterData scatter_data(std::span<const TrendEntry> entries);

/// One keyword sized relative to the most downloaded keyword in the set.
struct TagCloudEntry {
    std::string keyword;
    double count = 0.0;
    double size = 0.0; // count / max count, in (0, 1]

    bool operator==(const TagCloudEntry&) const = default;
};

/// Top `n` keywords by weighted downloads, descending; ties break on the
/// keyword. Zero-count keywords are dropped so sizes stay positive.
std::vector<TagCloudEntry> tagcloud_data(const std::map<CanonicalKeyword, double>& counts,
                                         std::size_t n);

/// Formats a weighted count: integral values print without a decimal point.
std::string format_count(double value);

/// Formats a ratio with four significant digits.
std::string format_ratio(double value);

/// One row of the ranked stats export.
struct StatsRow {
    std::string window_label;
    std::string key_type; // "article" | "keyword"
    std::string key;
    double count = 0.0;

    bool operator==(const StatsRow&) const = default;
};

/// CSV and JSON writers. CSV cells containing commas, quotes, or newlines
/// are quoted; everything the pipeline produces is plain otherwise.
void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows);
void write_stats_json(std::ostream& out, std::span<const StatsRow> rows);

void write_daily_csv(std::ostream& out, std::span<const std::pair<Date, std::size_t>> days);
void write_daily_json(std::ostream& out, std::span<const std::pair<Date, std::size_t>> days);

void write_trends_csv(std::ostream& out, std::span<const TrendEntry> entries);
void write_trends_json(std::ostream& out, std::span<const TrendEntry> entries);

void write_scatter_csv(std::ostream& out, const ScatterData& data);
void write_scatter_json(std::ostream& out, const ScatterData& data);

void write_tagcloud_json(std::ostream& out, std::span<const TagCloudEntry> entries);
void write_tagcloud_csv(std::ostream& out, std::span<const TagCloudEntry> entries);

void write_series_csv(std::ostream& out, const std::string& keyword,
                      std::span<const std::pair<std::string, double>> series);
void write_series_json(std::ostream& out, const std::string& keyword,
                       std::span<const std::pair<std::string, double>> series);

} // namespace trendtrace
