#include "trendtrace/aggregate.hpp"

#include "trendtrace/errors.hpp"

#include <algorithm>

namespace trendtrace {

std::vector<Window> make_windows(Date start, int days, int k, std::string_view prefix) {
    if (days < 1) throw ConfigError("window length must be at least one day");
    if (k < 1) throw ConfigError("window count must be at least 1");
    std::vector<Window> windows;
    windows.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Window w;
        w.start = start + std::chrono::days{static_cast<long>(i) * days};
        w.end = w.start + std::chrono::days{days - 1};
        w.label = std::string(prefix) + std::to_string(i + 1);
        windows.push_back(std::move(w));
    }
    return windows;
}

std::vector<Window> weekly_windows(Date start, int k) {
    return make_windows(start, 7, k, "week");
}

WindowStats build_window_stats(std::span<const LinkedEvent> events, const Corpus& corpus,
                               const Window& window) {
    WindowStats stats;
    stats.window = window;
    for (const auto& le : events) {
        if (!window.contains(le.event.ts)) continue;
        ++stats.total_raw_downloads;
        stats.total_weighted_downloads += le.weight;
        ++stats.article_counts[le.event.doi];
        // Zero-weight events leave the weighted maps untouched so that
        // dropping them entirely is a no-op on every weighted aggregate.
        if (le.weight == 0.0) continue;
        stats.article_weighted[le.event.doi] += le.weight;
        if (le.record == nullptr) continue;
        for (const auto& k : corpus.keywords_of(le.record->doi))
            stats.keyword_counts[k] += le.weight;
    }
    return stats;
}

std::vector<std::pair<Date, std::size_t>> daily_counts(std::span<const LinkedEvent> events,
                                                       const Window& range) {
    std::vector<std::pair<Date, std::size_t>> out;
    for (Date day = range.start; day <= range.end; day += std::chrono::days{1})
        out.emplace_back(day, 0);
    for (const auto& le : events) {
        const Date day = day_of(le.event.ts);
        if (!range.contains(day)) continue;
        out[static_cast<std::size_t>((day - range.start).count())].second += 1;
    }
    return out;
}

TopArticles top_articles(const WindowStats& stats, const Corpus& corpus, std::size_t n,
                         bool weighted) {
    TopArticles top;
    std::vector<RankedArticle> ranked;
    for (const auto& [doi, raw] : stats.article_counts) {
        const ArticleRecord* rec = corpus.find(doi);
        if (rec == nullptr) {
            top.unmatched_downloads += raw;
            continue;
        }
        double count = static_cast<double>(raw);
        if (weighted) {
            const auto it = stats.article_weighted.find(doi);
            count = it == stats.article_weighted.end() ? 0.0 : it->second;
        }
        ranked.push_back({rec, count});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedArticle& a, const RankedArticle& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.record->doi < b.record->doi;
    });
    if (ranked.size() > n) ranked.resize(n);
    top.entries = std::move(ranked);
    return top;
}

std::map<CanonicalKeyword, double> keyword_counts(std::span<const LinkedEvent> events,
                                                  const Corpus& corpus,
                                                  const Window& window) {
    return build_window_stats(events, corpus, window).keyword_counts;
}

} // namespace trendtrace
