#include "trendtrace/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace trendtrace {

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

ScatterData scatter_data(std::span<const TrendEntry> entries) {
    ScatterData data;
    for (const TrendEntry& e : entries) {
        if (!e.ratio2) {
            ++data.skipped;
            continue;
        }
        data.points.push_back({e.keyword, e.paper_count, *e.ratio2, e.emerging});
    }
    return data;
}

std::vector<TagCloudEntry> tagcloud_data(const std::map<CanonicalKeyword, double>& counts,
                                         std::size_t n) {
    std::vector<TagCloudEntry> entries;
    for (const auto& [keyword, count] : counts) {
        if (count > 0.0) entries.push_back({keyword, count, 0.0});
    }
    std::sort(entries.begin(), entries.end(), [](const TagCloudEntry& a, const TagCloudEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.keyword < b.keyword;
    });
    if (entries.size() > n) entries.resize(n);
    if (!entries.empty()) {
        const double max_count = entries.front().count;
        for (TagCloudEntry& e : entries) e.size = e.count / max_count;
    }
    return entries;
}

std::string format_count(double value) {
    char buf[64];
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%.0f", value);
    } else {
        std::snprintf(buf, sizeof(buf), "%.3f", value);
    }
    return buf;
}

std::string format_ratio(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", value);
    return buf;
}

void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows) {
    out << "window_label,key_type,key,count\n";
    for (const StatsRow& row : rows) {
        out << csv_escape(row.window_label) << ',' << csv_escape(row.key_type) << ','
            << csv_escape(row.key) << ',' << format_count(row.count) << '\n';
    }
}

void write_stats_json(std::ostream& out, std::span<const StatsRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const StatsRow& row : rows) {
        nlohmann::ordered_json j;
        j["window_label"] = row.window_label;
        j["key_type"] = row.key_type;
        j["key"] = row.key;
        j["count"] = row.count;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_daily_csv(std::ostream& out, std::span<const std::pair<Date, std::size_t>> days) {
    out << "date,count\n";
    for (const auto& [day, count] : days) out << format_date(day) << ',' << count << '\n';
}

void write_daily_json(std::ostream& out, std::span<const std::pair<Date, std::size_t>> days) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [day, count] : days) {
        nlohmann::ordered_json j;
        j["date"] = format_date(day);
        j["count"] = count;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_trends_csv(std::ostream& out, std::span<const TrendEntry> entries) {
    out << "keyword,downloads,paper_count,ratio2,first_year,is_new,enough_downloads,"
           "high_ratio,emerging\n";
    for (const TrendEntry& e : entries) {
        out << csv_escape(e.keyword) << ',' << format_count(e.downloads) << ',' << e.paper_count
            << ',' << (e.ratio2 ? format_ratio(*e.ratio2) : "") << ','
            << (e.first_year ? std::to_string(*e.first_year) : "") << ','
            << (e.criteria.is_new ? "true" : "false") << ','
            << (e.criteria.enough_downloads ? "true" : "false") << ','
            << (e.criteria.high_ratio ? "true" : "false") << ','
            << (e.emerging ? "true" : "false") << '\n';
    }
}

void write_trends_json(std::ostream& out, std::span<const TrendEntry> entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TrendEntry& e : entries) {
        nlohmann::ordered_json j;
        j["keyword"] = e.keyword;
        j["downloads"] = e.downloads;
        j["paper_count"] = e.paper_count;
        if (e.ratio2) j["ratio2"] = *e.ratio2; else j["ratio2"] = nullptr;
        if (e.first_year) j["first_year"] = *e.first_year; else j["first_year"] = nullptr;
        j["is_new"] = e.criteria.is_new;
        j["enough_downloads"] = e.criteria.enough_downloads;
        j["high_ratio"] = e.criteria.high_ratio;
        j["emerging"] = e.emerging;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_scatter_csv(std::ostream& out, const ScatterData& data) {
    out << "keyword,paper_count,ratio2,emerging\n";
    for (const ScatterPoint& p : data.points) {
        out << csv_escape(p.keyword) << ',' << p.paper_count << ',' << format_ratio(p.ratio2)
            << ',' << (p.emerging ? "true" : "false") << '\n';
    }
}

void write_scatter_json(std::ostream& out, const ScatterData& data) {
    nlohmann::ordered_json j;
    j["points"] = nlohmann::ordered_json::array();
    for (const ScatterPoint& p : data.points) {
        nlohmann::ordered_json point;
        point["keyword"] = p.keyword;
        point["paper_count"] = p.paper_count;
        point["ratio2"] = p.ratio2;
        point["emerging"] = p.emerging;
        j["points"].push_back(std::move(point));
    }
    j["skipped"] = data.skipped;
    out << j.dump(2) << '\n';
}

void write_tagcloud_json(std::ostream& out, std::span<const TagCloudEntry> entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TagCloudEntry& e : entries) {
        nlohmann::ordered_json j;
        j["keyword"] = e.keyword;
        j["count"] = e.count;
        j["size"] = e.size;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void write_tagcloud_csv(std::ostream& out, std::span<const TagCloudEntry> entries) {
    out << "keyword,count,size\n";
    for (const TagCloudEntry& e : entries) {
        out << csv_escape(e.keyword) << ',' << format_count(e.count) << ','
            << format_ratio(e.size) << '\n';
    }
}

void write_series_csv(std::ostream& out, const std::string& keyword,
                      std::span<const std::pair<std::string, double>> series) {
    out << "keyword,window_label,ratio1\n";
    for (const auto& [label, ratio] : series) {
        out << csv_escape(keyword) << ',' << csv_escape(label) << ',' << format_ratio(ratio)
            << '\n';
    }
}

void write_series_json(std::ostream& out, const std::string& keyword,
                       std::span<const std::pair<std::string, double>> series) {
    nlohmann::ordered_json j;
    j["keyword"] = keyword;
    j["series"] = nlohmann::ordered_json::array();
    for (const auto& [label, ratio] : series) {
        nlohmann::ordered_json point;
        point["window"] = label;
        point["ratio1"] = ratio;
        j["series"].push_back(std::move(point));
    }
    out << j.dump(2) << '\n';
}

} // namespace trendtrace
