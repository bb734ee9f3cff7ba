#include <doctest.h>

#include "trendtrace/errors.hpp"
#include "trendtrace/trends.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace trendtrace;

namespace {

Corpus trend_corpus() {
    Normalizer n;
    std::istringstream in(
        "DOI\tTI\tAU\tPY\tDE\tID\tSRC\n"
        "10.1/t1\tMicroblog uptake\tA\t2010\ttwitter\t\twos\n"
        "10.1/t2\tMicroblog spread\tB\t2011\ttwitter\t\twos\n"
        "10.1/t3\tMicroblog reach\tC\t2012\ttwitter\t\twos\n"
        "10.1/c1\tCounting classics\tD\t1980\tcitations\t\twos\n"
        "10.1/c2\tCounting revisited\tE\t1985\tcitations\t\twos\n");
    return load_corpus(in, n);
}

WindowStats march_stats() {
    WindowStats stats;
    stats.window = {parse_date("2012-03-01"), parse_date("2012-03-07"), "week1"};
    stats.total_raw_downloads = 523;
    stats.total_weighted_downloads = 523.0;
    stats.keyword_counts = {{"citation", 400.0}, {"twitter", 123.0}};
    return stats;
}

TrendConfig reference_2012() {
    TrendConfig cfg;
    cfg.reference_year = 2012;
    return cfg;
}

} // namespace

TEST_CASE("ratio1 is the share of the window total") {
    CHECK(ratio1(10.0, 100.0) == 0.1);
    CHECK(ratio1(0.0, 5.0) == 0.0);
    CHECK(ratio1(100.0, 100.0) == 1.0);
    CHECK(ratio1(250.0, 1000.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(ratio1(3.0, 0.0), ZeroTotalError);
}

TEST_CASE("ratio2 is downloads per carrying paper") {
    CHECK(ratio2(4214.0, 433) == doctest::Approx(9.73210).epsilon(1e-5));
    CHECK(ratio2(123.0, 3) == 41.0);
    CHECK(ratio2(0.0, 5) == 0.0);
    CHECK_THROWS_AS(ratio2(10.0, 0), NoPapersError);
}

TEST_CASE("ratios scale the way shares and intensities must") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> mag(1.0, 1e4);
    for (int i = 0; i < 200; ++i) {
        const double k = mag(rng), t = k + mag(rng), c = mag(rng);
        CHECK(ratio1(c * k, c * t) == doctest::Approx(ratio1(k, t)));
        const std::size_t p = 1 + static_cast<std::size_t>(mag(rng)) % 500;
        CHECK(ratio2(c * k, p) == doctest::Approx(c * ratio2(k, p)));
        CHECK(ratio1(k, t) >= 0.0);
        CHECK(ratio1(k, t) <= 1.0);
    }
}

TEST_CASE("criteria sit exactly on their boundaries") {
    const TrendConfig cfg = reference_2012();

    SUBCASE("download floor is inclusive") {
        CHECK(evaluate_criteria(50.0, 100.0, 2012, cfg).enough_downloads);
        CHECK_FALSE(evaluate_criteria(49.999, 100.0, 2012, cfg).enough_downloads);
    }
    SUBCASE("ratio threshold is strict") {
        CHECK_FALSE(evaluate_criteria(100.0, 20.0, 2012, cfg).high_ratio);
        CHECK(evaluate_criteria(100.0, 20.0001, 2012, cfg).high_ratio);
    }
    SUBCASE("newness window is inclusive at its edge") {
        CHECK(evaluate_criteria(100.0, 100.0, 2006, cfg).is_new); // 2012 - 6
        CHECK_FALSE(evaluate_criteria(100.0, 100.0, 2005, cfg).is_new);
    }
    SUBCASE("absent values fail their rule") {
        const CriterionFlags f = evaluate_criteria(100.0, std::nullopt, std::nullopt, cfg);
        CHECK_FALSE(f.high_ratio);
        CHECK_FALSE(f.is_new);
        CHECK(f.enough_downloads);
    }
    SUBCASE("emerging needs all three") {
        CHECK(is_emerging({true, true, true}));
        CHECK_FALSE(is_emerging({false, true, true}));
        CHECK_FALSE(is_emerging({true, false, true}));
        CHECK_FALSE(is_emerging({true, true, false}));
    }
}

TEST_CASE("tightening any threshold never adds emerging keywords") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dl(0.0, 200.0);
    std::uniform_real_distribution<double> r2(0.0, 60.0);
    std::uniform_int_distribution<int> year(1995, 2012);
    std::uniform_int_distribution<int> win(0, 10);
    for (int i = 0; i < 100; ++i) {
        TrendConfig loose;
        loose.reference_year = 2012;
        loose.min_downloads = dl(rng);
        loose.min_ratio2 = r2(rng);
        loose.newness_window_years = win(rng);
        TrendConfig tight = loose;
        tight.min_downloads += dl(rng);
        tight.min_ratio2 += r2(rng);
        tight.newness_window_years = std::min(tight.newness_window_years, win(rng));

        const double downloads = dl(rng);
        const double ratio = r2(rng);
        const int first = year(rng);
        if (is_emerging(evaluate_criteria(downloads, ratio, first, tight)))
            CHECK(is_emerging(evaluate_criteria(downloads, ratio, first, loose)));
    }
}

TEST_CASE("detect_emerging applies the rules over the corpus") {
    const Corpus corpus = trend_corpus();
    const auto entries = detect_emerging(march_stats(), corpus, reference_2012());
    REQUIRE(entries.size() == 2);

    // Ordered by descending ratio2: the old workhorse keyword first.
    CHECK(entries[0].keyword == "citation");
    CHECK(entries[0].ratio2 == 200.0);
    CHECK(entries[0].criteria == CriterionFlags{false, true, true});
    CHECK_FALSE(entries[0].emerging);

    const TrendEntry expected{"twitter", 123.0, 3, 41.0, 2010, {true, true, true}, true};
    CHECK(entries[1] == expected);
}

TEST_CASE("keywords without corpus papers become data-quality entries") {
    const Corpus corpus = trend_corpus();
    WindowStats stats = march_stats();
    stats.keyword_counts["phantom"] = 30.0;

    const auto entries = detect_emerging(stats, corpus, reference_2012());
    REQUIRE(entries.size() == 3);
    CHECK(entries.back().keyword == "phantom"); // no ratio2 sorts last
    CHECK_FALSE(entries.back().ratio2.has_value());
    CHECK_FALSE(entries.back().first_year.has_value());
    CHECK(entries.back().paper_count == 0);
    CHECK_FALSE(entries.back().emerging);
}

TEST_CASE("candidate set is the top_k by downloads") {
    const Corpus corpus = trend_corpus();
    WindowStats stats;
    stats.window = {parse_date("2012-03-01"), parse_date("2012-03-07"), "week1"};
    stats.total_weighted_downloads = 150.0;
    stats.keyword_counts = {{"a", 30.0}, {"b", 30.0}, {"c", 50.0}, {"d", 10.0}, {"e", 20.0}};

    TrendConfig cfg = reference_2012();
    cfg.top_k = 3;
    const auto entries = detect_emerging(stats, corpus, cfg);
    REQUIRE(entries.size() == 3);
    std::set<std::string> kept;
    for (const auto& e : entries) kept.insert(e.keyword);
    // c(50) first, then the 30-download tie resolved by ascending keyword.
    CHECK(kept == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("every entry's emerging flag is the conjunction of its rules") {
    const Corpus corpus = trend_corpus();
    WindowStats stats = march_stats();
    stats.keyword_counts["phantom"] = 75.0;
    for (const auto& e : detect_emerging(stats, corpus, reference_2012()))
        CHECK(e.emerging == is_emerging(e.criteria));
}

TEST_CASE("detect_emerging is deterministic") {
    const Corpus corpus = trend_corpus();
    const auto a = detect_emerging(march_stats(), corpus, reference_2012());
    const auto b = detect_emerging(march_stats(), corpus, reference_2012());
    CHECK(a == b);
}

TEST_CASE("weekly_ratio_series walks the windows in order") {
    auto stats_for = [](const char* label, double twitter, double total) {
        WindowStats s;
        s.window.label = label;
        s.total_weighted_downloads = total;
        s.total_raw_downloads = static_cast<std::size_t>(2 * total);
        if (twitter > 0.0) s.keyword_counts["twitter"] = twitter;
        return s;
    };
    const std::vector<WindowStats> per_window{
        stats_for("week1", 0.0, 100.0),
        stats_for("week2", 10.0, 100.0),
        stats_for("week3", 50.0, 500.0),
        stats_for("week4", 25.0, 100.0),
    };

    SUBCASE("weighted denominator") {
        const auto series = weekly_ratio_series("twitter", per_window);
        REQUIRE(series.size() == 4);
        CHECK(series[0] == std::pair<std::string, double>{"week1", 0.0});
        CHECK(series[1].second == 0.1);
        CHECK(series[2].second == 0.1);
        CHECK(series[3].second == 0.25);
    }
    SUBCASE("raw denominator doubles the base here") {
        const auto series = weekly_ratio_series("twitter", per_window, true);
        CHECK(series[1].second == 0.05);
        CHECK(series[3].second == 0.125);
    }
    SUBCASE("absent keyword yields zeros") {
        for (const auto& [label, value] : weekly_ratio_series("nowhere", per_window))
            CHECK(value == 0.0);
    }
    SUBCASE("a zero-total window is an error") {
        std::vector<WindowStats> with_gap = per_window;
        with_gap[2].total_weighted_downloads = 0.0;
        CHECK_THROWS_AS(weekly_ratio_series("twitter", with_gap), ZeroTotalError);
    }
}
