#pragma once

#include "trendtrace/aggregate.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trendtrace {

/// Thresholds for the emerging-keyword rules.
struct TrendConfig {
    double min_downloads = 50.0;   // rule 2: downloads >= min_downloads
    double min_ratio2 = 20.0;      // rule 3: ratio2 strictly > min_ratio2
    int newness_window_years = 6;  // rule 1: first year within this many years
    int reference_year = 0;
    std::size_t top_k = 50;        // candidates taken from the download ranking
};

/// Share of one keyword's downloads in the window total.
/// Throws ZeroTotalError when total_downloads is 0.
double ratio1(double keyword_downloads, double total_downloads);

/// Download intensity per corpus paper carrying the keyword.
/// Throws NoPapersError when paper_count is 0.
double ratio2(double downloads, std::size_t paper_count);

struct CriterionFlags {
    bool is_new = false;
    bool enough_downloads = false;
    bool high_ratio = false;

    bool operator==(const CriterionFlags&) const = default;
};

/// The three rules. An absent ratio or first year fails its rule.
CriterionFlags evaluate_criteria(double downloads, std::optional<double> r2,
                                 std::optional<int> first_year, const TrendConfig& cfg);

inline bool is_emerging(const CriterionFlags& c) {
    return c.is_new && c.enough_downloads && c.high_ratio;
}

struct TrendEntry {
    CanonicalKeyword keyword;
    double downloads = 0.0;
    std::size_t paper_count = 0;
    std::optional<double> ratio2;   // absent when paper_count is 0 (data-quality flag)
    std::optional<int> first_year;
    CriterionFlags criteria;
    bool emerging = false;

    bool operator==(const TrendEntry&) const = default;
};

/// Ranks the top_k most-downloaded keywords, computes both ratios'
/// ingredients for each, applies the rules, and returns every candidate
/// ordered by descending ratio2 (entries lacking ratio2 last), ties by
/// ascending keyword. Keywords absent from the corpus become flagged
/// data-quality entries rather than failures.
std::vector<TrendEntry> detect_emerging(const WindowStats& stats, const Corpus& corpus,
                                        const TrendConfig& cfg);

/// ratio1 of one keyword across consecutive windows, in window order.
/// Throws ZeroTotalError if any window has a zero denominator.
std::vector<std::pair<std::string, double>> weekly_ratio_series(
    const CanonicalKeyword& keyword, std::span<const WindowStats> per_window_stats,
    bool raw_denominator = false);

} // namespace trendtrace
