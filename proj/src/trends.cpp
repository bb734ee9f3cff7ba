#include "trendtrace/trends.hpp"

#include "trendtrace/errors.hpp"

#include <algorithm>

namespace trendtrace {

double ratio1(double keyword_downloads, double total_downloads) {
    if (total_downloads <= 0.0) throw ZeroTotalError();
    return keyword_downloads / total_downloads;
}

double ratio2(double downloads, std::size_t paper_count) {
    if (paper_count == 0) throw NoPapersError();
    return downloads / static_cast<double>(paper_count);
}

CriterionFlags evaluate_criteria(double downloads, std::optional<double> r2,
                                 std::optional<int> first_year, const TrendConfig& cfg) {
    CriterionFlags flags;
    flags.is_new =
        first_year.has_value() && *first_year >= cfg.reference_year - cfg.newness_window_years;
    flags.enough_downloads = downloads >= cfg.min_downloads;
    flags.high_ratio = r2.has_value() && *r2 > cfg.min_ratio2;
    return flags;
}

std::vector<TrendEntry> detect_emerging(const WindowStats& stats, const Corpus& corpus,
                                        const TrendConfig& cfg) {
    // Candidate set: top_k keywords by weighted downloads, ties by keyword.
    std::vector<std::pair<CanonicalKeyword, double>> ranked(stats.keyword_counts.begin(),
                                                            stats.keyword_counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > cfg.top_k) ranked.resize(cfg.top_k);

    std::vector<TrendEntry> entries;
    entries.reserve(ranked.size());
    for (auto& [keyword, downloads] : ranked) {
        TrendEntry entry;
        entry.keyword = keyword;
        entry.downloads = downloads;
        entry.paper_count = corpus.papers_with_keyword(keyword);
        if (entry.paper_count > 0) entry.ratio2 = ratio2(downloads, entry.paper_count);
        entry.first_year = corpus.first_year(keyword);
        entry.criteria = evaluate_criteria(downloads, entry.ratio2, entry.first_year, cfg);
        entry.emerging = is_emerging(entry.criteria);
        entries.push_back(std::move(entry));
    }

    std::sort(entries.begin(), entries.end(), [](const TrendEntry& a, const TrendEntry& b) {
        if (a.ratio2.has_value() != b.ratio2.has_value()) return a.ratio2.has_value();
        if (a.ratio2.has_value() && *a.ratio2 != *b.ratio2) return *a.ratio2 > *b.ratio2;
        return a.keyword < b.keyword;
    });
    return entries;
}

std::vector<std::pair<std::string, double>> weekly_ratio_series(
    const CanonicalKeyword& keyword, std::span<const WindowStats> per_window_stats,
    bool raw_denominator) {
    std::vector<std::pair<std::string, double>> series;
    series.reserve(per_window_stats.size());
    for (const auto& stats : per_window_stats) {
        const auto it = stats.keyword_counts.find(keyword);
        const double downloads = it == stats.keyword_counts.end() ? 0.0 : it->second;
        const double total = raw_denominator
                                 ? static_cast<double>(stats.total_raw_downloads)
                                 : stats.total_weighted_downloads;
        series.emplace_back(stats.window.label, ratio1(downloads, total));
    }
    return series;
}

} // namespace trendtrace
