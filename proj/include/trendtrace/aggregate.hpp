#pragma once

#include "trendtrace/corpus.hpp"
#include "trendtrace/dates.hpp"
#include "trendtrace/ingest.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace trendtrace {

/// Inclusive UTC date range.
struct Window {
    Date start;
    Date end;
    std::string label;

    bool contains(Date day) const { return day >= start && day <= end; }
    bool contains(std::int64_t ts) const { return contains(day_of(ts)); }
};

/// k consecutive 7-day windows labeled "week1".."weekk".
std::vector<Window> weekly_windows(Date start, int k);

/// k consecutive windows of `days` days labeled "<prefix>1".."<prefix>k".
std::vector<Window> make_windows(Date start, int days, int k, std::string_view prefix);

/// Per-window aggregates. article_counts covers every event, matched or
/// not; keyword_counts accumulates event weights over the matched
/// record's canonical keywords.
struct WindowStats {
    Window window;
    std::size_t total_raw_downloads = 0;
    double total_weighted_downloads = 0.0;
    std::map<std::string, std::size_t> article_counts;  // DOI -> raw count
    std::map<std::string, double> article_weighted;     // DOI -> weighted count
    std::map<CanonicalKeyword, double> keyword_counts;  // keyword -> weighted count
};

WindowStats build_window_stats(std::span<const LinkedEvent> events, const Corpus& corpus,
                               const Window& window);

/// Raw (unweighted) event counts per calendar day, zero-filled over the
/// whole range.
std::vector<std::pair<Date, std::size_t>> daily_counts(std::span<const LinkedEvent> events,
                                                       const Window& range);

struct RankedArticle {
    const ArticleRecord* record = nullptr;
    double count = 0.0; // raw or weighted depending on the ranking mode
};

struct TopArticles {
    std::vector<RankedArticle> entries;
    std::size_t unmatched_downloads = 0; // events excluded from the ranking
};

/// Top n articles by raw count (weighted when `weighted`), ties broken by
/// ascending DOI. DOIs absent from the corpus are excluded and reported.
TopArticles top_articles(const WindowStats& stats, const Corpus& corpus, std::size_t n,
                         bool weighted = false);

/// Weighted keyword download counts over one window.
std::map<CanonicalKeyword, double> keyword_counts(std::span<const LinkedEvent> events,
                                                  const Corpus& corpus,
                                                  const Window& window);

} // namespace trendtrace
