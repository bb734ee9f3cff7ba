#include "trendtrace/cli.hpp"

#include "trendtrace/aggregate.hpp"
#include "trendtrace/corpus.hpp"
#include "trendtrace/errors.hpp"
#include "trendtrace/ingest.hpp"
#include "trendtrace/keywords.hpp"
#include "trendtrace/report.hpp"
#include "trendtrace/simulate.hpp"
#include "trendtrace/trends.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trendtrace {
namespace {

namespace fs = std::filesystem;

constexpr const char* kConfigEnvVar = "TRENDTRACE_CONFIG";

/// Everything a run can be told, before flags are applied. Precedence:
/// flags override the config file, which overrides these defaults.
struct RunConfig {
    std::string corpus_path;
    std::vector<std::string> event_paths;
    std::string synonym_path;
    std::string stopword_path;
    std::string exception_path;
    std::string out_dir = ".";
    std::string format = "csv";
    double weight_indexed = 1.0;
    double weight_online_first = 0.0;
    std::string from;
    std::string to;
    std::string window_start;
    int window_days = 7;
    int window_count = 4;
    TrendConfig trend;
    bool weighted_articles = false;
    bool raw_ratio1_denominator = false;
    bool lenient_parse = false;
};

/// Per-subcommand extras that have no config-file equivalent.
struct Extras {
    std::size_t top = 50;
    std::string keyword;
    std::string merged_out;
    std::uint64_t seed = 0;
    double weekday_mean = 1000.0;
    double weekend_low = 400.0;
    double weekend_high = 800.0;
    double popularity_skew = 1.0;
};

/// The config file must be known before CLI11 parses, so --config is
/// located by a plain argv scan (and doubles as a normal option so it
/// shows up in help and is consumed).
std::string find_config_path(int argc, char** argv) {
    std::string path;
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) path = std::string(arg.substr(9));
    }
    return path;
}

void apply_config(RunConfig& cfg, const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
        if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
        for (const auto& [key, value] : doc.items()) {
            if (key == "corpus") cfg.corpus_path = value.get<std::string>();
            else if (key == "events") cfg.event_paths = value.get<std::vector<std::string>>();
            else if (key == "synonyms") cfg.synonym_path = value.get<std::string>();
            else if (key == "stopwords") cfg.stopword_path = value.get<std::string>();
            else if (key == "plural_exceptions") cfg.exception_path = value.get<std::string>();
            else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
            else if (key == "format") cfg.format = value.get<std::string>();
            else if (key == "weight_indexed") cfg.weight_indexed = value.get<double>();
            else if (key == "weight_onlinefirst") cfg.weight_online_first = value.get<double>();
            else if (key == "from") cfg.from = value.get<std::string>();
            else if (key == "to") cfg.to = value.get<std::string>();
            else if (key == "window_start") cfg.window_start = value.get<std::string>();
            else if (key == "window_days") cfg.window_days = value.get<int>();
            else if (key == "window_count") cfg.window_count = value.get<int>();
            else if (key == "min_downloads") cfg.trend.min_downloads = value.get<double>();
            else if (key == "min_ratio2") cfg.trend.min_ratio2 = value.get<double>();
            else if (key == "newness_window_years")
                cfg.trend.newness_window_years = value.get<int>();
            else if (key == "reference_year") cfg.trend.reference_year = value.get<int>();
            else if (key == "top_k") cfg.trend.top_k = value.get<std::size_t>();
            else if (key == "weighted_articles") cfg.weighted_articles = value.get<bool>();
            else if (key == "raw_ratio1_denominator")
                cfg.raw_ratio1_denominator = value.get<bool>();
            else if (key == "lenient_parse") cfg.lenient_parse = value.get<bool>();
            else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path.string() + "': " + e.what());
    }
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config format must be \"csv\" or \"json\"");
}

Normalizer make_normalizer(const RunConfig& cfg) {
    return load_normalizer(cfg.synonym_path, cfg.stopword_path, cfg.exception_path);
}

Corpus load_corpus_or_fail(const RunConfig& cfg, const Normalizer& normalizer) {
    if (cfg.corpus_path.empty()) throw ConfigError("no corpus file given (--corpus)");
    return load_corpus_file(cfg.corpus_path, normalizer);
}

/// Parses every event file, concatenates in listing order, and for
/// multi-file runs merges by timestamp (single files keep file order).
std::vector<DownloadEvent> load_events_or_fail(const RunConfig& cfg) {
    if (cfg.event_paths.empty()) throw ConfigError("no event files given (--events)");
    const ParseOptions options{cfg.lenient_parse};
    std::vector<DownloadEvent> all;
    for (const std::string& path : cfg.event_paths) {
        ParseResult result = parse_events_file(path, options);
        for (const std::string& warning : result.warnings)
            std::cerr << path << ": " << warning << '\n';
        all.insert(all.end(), std::make_move_iterator(result.events.begin()),
                   std::make_move_iterator(result.events.end()));
    }
    if (cfg.event_paths.size() > 1) {
        std::stable_sort(all.begin(), all.end(),
                         [](const DownloadEvent& a, const DownloadEvent& b) { return a.ts < b.ts; });
    }
    return all;
}

LinkResult load_linked(const RunConfig& cfg, const Corpus& corpus) {
    return link_events(load_events_or_fail(cfg), corpus,
                       {cfg.weight_indexed, cfg.weight_online_first});
}

Window resolve_range(const RunConfig& cfg, std::span<const LinkedEvent> events) {
    std::optional<Date> from;
    std::optional<Date> to;
    if (!cfg.from.empty()) from = parse_date(cfg.from);
    if (!cfg.to.empty()) to = parse_date(cfg.to);
    if (!from || !to) {
        if (events.empty())
            throw ConfigError("cannot infer a date range from an empty event stream; "
                              "pass --from and --to");
        const auto [lo, hi] = std::minmax_element(
            events.begin(), events.end(),
            [](const LinkedEvent& a, const LinkedEvent& b) { return a.event.ts < b.event.ts; });
        if (!from) from = day_of(lo->event.ts);
        if (!to) to = day_of(hi->event.ts);
    }
    if (*from > *to) throw ConfigError("--from is after --to");
    return {*from, *to, format_date(*from) + ".." + format_date(*to)};
}

std::vector<Window> resolve_windows(const RunConfig& cfg) {
    if (cfg.window_start.empty()) throw ConfigError("no window start given (--window-start)");
    const Date start = parse_date(cfg.window_start);
    const char* prefix = cfg.window_days == 7 ? "week" : "window";
    return make_windows(start, cfg.window_days, cfg.window_count, prefix);
}

TrendConfig resolve_trend_config(const RunConfig& cfg, const Window& range) {
    TrendConfig trend = cfg.trend;
    if (trend.reference_year == 0) {
        const std::chrono::year_month_day ymd{range.end};
        trend.reference_year = int(ymd.year());
    }
    return trend;
}

std::ofstream open_report(const RunConfig& cfg, const std::string& name) {
    const fs::path dir = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
    fs::create_directories(dir);
    const fs::path file = dir / name;
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write '" + file.string() + "'");
    return out;
}

void cmd_corpus_validate(const RunConfig& cfg) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    std::size_t indexed = 0;
    std::size_t online_first = 0;
    for (const auto& [doi, record] : corpus.records())
        ++(record.source == SourceClass::Indexed ? indexed : online_first);
    std::cout << "records: " << corpus.size() << '\n'
              << "indexed: " << indexed << '\n'
              << "online_first: " << online_first << '\n'
              << "keywords: " << corpus.keyword_index().size() << '\n';
}

void cmd_ingest(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    std::vector<DownloadEvent> events = load_events_or_fail(cfg);
    if (!extras.merged_out.empty()) {
        std::ofstream out(extras.merged_out, std::ios::binary);
        if (!out) throw Error("cannot write '" + extras.merged_out + "'");
        write_events(events, out);
    }
    const std::size_t total = events.size();
    const LinkResult linked = link_events(std::move(events), corpus,
                                          {cfg.weight_indexed, cfg.weight_online_first});
    std::cout << "events: " << total << '\n'
              << "matched_indexed: " << linked.report.matched_indexed << '\n'
              << "matched_onlinefirst: " << linked.report.matched_onlinefirst << '\n'
              << "unmatched: " << linked.report.unmatched << '\n';
}

void cmd_simulate(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    SimConfig sim;
    sim.seed = extras.seed;
    sim.start_date = parse_date(cfg.from);
    sim.end_date = parse_date(cfg.to);
    sim.weekday_mean = extras.weekday_mean;
    sim.weekend_low = extras.weekend_low;
    sim.weekend_high = extras.weekend_high;
    sim.popularity_skew = extras.popularity_skew;
    const std::vector<DownloadEvent> trace = simulate_trace(corpus, sim);
    {
        std::ofstream out = open_report(cfg, "trace.jsonl");
        write_events(trace, out);
    }
    {
        std::ofstream out = open_report(cfg, "trace_meta.json");
        write_sim_metadata(sim, corpus.size(), out);
    }
    std::cout << "events: " << trace.size() << '\n';
}

void cmd_stats_daily(const RunConfig& cfg) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const Window range = resolve_range(cfg, linked.events);
    const auto days = daily_counts(linked.events, range);
    std::ofstream out = open_report(cfg, "daily." + cfg.format);
    if (cfg.format == "json") write_daily_json(out, days);
    else write_daily_csv(out, days);
}

void cmd_stats_top_articles(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const Window range = resolve_range(cfg, linked.events);
    const WindowStats stats = build_window_stats(linked.events, corpus, range);
    const TopArticles top = top_articles(stats, corpus, extras.top, cfg.weighted_articles);
    std::vector<StatsRow> rows;
    rows.reserve(top.entries.size());
    for (const RankedArticle& entry : top.entries)
        rows.push_back({range.label, "article", entry.record->doi, entry.count});
    std::ofstream out = open_report(cfg, "top_articles." + cfg.format);
    if (cfg.format == "json") write_stats_json(out, rows);
    else write_stats_csv(out, rows);
    std::cout << "unmatched_downloads: " << top.unmatched_downloads << '\n';
}

void cmd_stats_top_keywords(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    std::vector<StatsRow> rows;
    for (const Window& window : resolve_windows(cfg)) {
        const WindowStats stats = build_window_stats(linked.events, corpus, window);
        std::vector<std::pair<CanonicalKeyword, double>> ranked(stats.keyword_counts.begin(),
                                                                stats.keyword_counts.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        if (ranked.size() > extras.top) ranked.resize(extras.top);
        for (const auto& [keyword, count] : ranked)
            rows.push_back({window.label, "keyword", keyword, count});
    }
    std::ofstream out = open_report(cfg, "top_keywords." + cfg.format);
    if (cfg.format == "json") write_stats_json(out, rows);
    else write_stats_csv(out, rows);
}

std::vector<TrendEntry> run_trend_detection(const RunConfig& cfg, const Corpus& corpus,
                                            std::span<const LinkedEvent> events,
                                            const Window& range) {
    const WindowStats stats = build_window_stats(events, corpus, range);
    return detect_emerging(stats, corpus, resolve_trend_config(cfg, range));
}

void cmd_trends(const RunConfig& cfg) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const Window range = resolve_range(cfg, linked.events);
    const std::vector<TrendEntry> entries = run_trend_detection(cfg, corpus, linked.events, range);
    {
        std::ofstream out = open_report(cfg, "trends." + cfg.format);
        if (cfg.format == "json") write_trends_json(out, entries);
        else write_trends_csv(out, entries);
    }
    {
        const ScatterData scatter = scatter_data(entries);
        std::ofstream out = open_report(cfg, "scatter." + cfg.format);
        if (cfg.format == "json") write_scatter_json(out, scatter);
        else write_scatter_csv(out, scatter);
    }
    for (const TrendEntry& entry : entries)
        if (entry.emerging) std::cout << entry.keyword << '\n';
}

void cmd_report_scatter(const RunConfig& cfg) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const Window range = resolve_range(cfg, linked.events);
    const ScatterData scatter =
        scatter_data(run_trend_detection(cfg, corpus, linked.events, range));
    std::ofstream out = open_report(cfg, "scatter." + cfg.format);
    if (cfg.format == "json") write_scatter_json(out, scatter);
    else write_scatter_csv(out, scatter);
    std::cout << "skipped: " << scatter.skipped << '\n';
}

void cmd_report_tagcloud(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const Window range = resolve_range(cfg, linked.events);
    const WindowStats stats = build_window_stats(linked.events, corpus, range);
    const std::vector<TagCloudEntry> entries = tagcloud_data(stats.keyword_counts, extras.top);
    std::ofstream out = open_report(cfg, "tagcloud." + cfg.format);
    if (cfg.format == "json") write_tagcloud_json(out, entries);
    else write_tagcloud_csv(out, entries);
}

void cmd_report_series(const RunConfig& cfg, const Extras& extras) {
    const Normalizer normalizer = make_normalizer(cfg);
    const Corpus corpus = load_corpus_or_fail(cfg, normalizer);
    const LinkResult linked = load_linked(cfg, corpus);
    const CanonicalKeyword keyword = normalize(extras.keyword, normalizer);
    std::vector<WindowStats> per_window;
    for (const Window& window : resolve_windows(cfg))
        per_window.push_back(build_window_stats(linked.events, corpus, window));
    const auto series = weekly_ratio_series(keyword, per_window, cfg.raw_ratio1_denominator);
    std::ofstream out = open_report(cfg, "series." + cfg.format);
    if (cfg.format == "json") write_series_json(out, keyword, series);
    else write_series_csv(out, keyword, series);
}

const CLI::Validator date_arg(
    [](std::string& value) -> std::string {
        try {
            parse_date(value);
            return {};
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
    },
    "DATE(YYYY-MM-DD)");

} // namespace

int run_cli(int argc, char** argv) {
    RunConfig cfg;
    Extras extras;
    std::string config_echo;

    CLI::App app{"trace research trends in article-download streams"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_echo,
                        "JSON config file (default: $" + std::string(kConfigEnvVar) + ")");
        cmd->add_option("--corpus", cfg.corpus_path, "bibliographic TSV file");
        cmd->add_option("--synonyms", cfg.synonym_path, "synonym mapping file");
        cmd->add_option("--stopwords", cfg.stopword_path, "stopword list file");
        cmd->add_option("--plural-exceptions", cfg.exception_path, "plural exception list file");
        cmd->add_option("--out", cfg.out_dir, "output directory for report files");
        cmd->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember(std::set<std::string>{"csv", "json"}));
    };
    const auto add_events = [&](CLI::App* cmd) {
        cmd->add_option("--events", cfg.event_paths, "event JSON Lines file, repeatable");
        cmd->add_flag("--lenient-parse", cfg.lenient_parse,
                      "skip malformed event lines with a warning");
        cmd->add_option("--weight-indexed", cfg.weight_indexed, "weight for indexed records");
        cmd->add_option("--weight-onlinefirst", cfg.weight_online_first,
                        "weight for online-first records");
    };
    const auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--from", cfg.from, "range start date (default: first event day)")
            ->check(date_arg);
        cmd->add_option("--to", cfg.to, "range end date (default: last event day)")
            ->check(date_arg);
    };
    const auto add_windows = [&](CLI::App* cmd) {
        cmd->add_option("--window-start", cfg.window_start, "first window start date")
            ->check(date_arg);
        cmd->add_option("--window-days", cfg.window_days, "days per window")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--windows", cfg.window_count, "number of windows")
            ->check(CLI::PositiveNumber);
    };
    const auto add_trend = [&](CLI::App* cmd) {
        cmd->add_option("--min-downloads", cfg.trend.min_downloads,
                        "minimum downloads for an emerging keyword");
        cmd->add_option("--min-ratio2", cfg.trend.min_ratio2,
                        "downloads-per-paper ratio an emerging keyword must exceed");
        cmd->add_option("--newness-window", cfg.trend.newness_window_years,
                        "years before the reference year still counted as new");
        cmd->add_option("--reference-year", cfg.trend.reference_year,
                        "newness reference year (default: year of the range end)");
        cmd->add_option("--top-k", cfg.trend.top_k, "most-downloaded keywords to consider");
    };

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus maintenance");
    corpus_cmd->require_subcommand(1);
    CLI::App* corpus_validate =
        corpus_cmd->add_subcommand("validate", "load the corpus and report its shape");
    add_common(corpus_validate);
    corpus_validate->callback([&] { cmd_corpus_validate(cfg); });

    CLI::App* ingest_cmd =
        app.add_subcommand("ingest", "parse event streams and link them to the corpus");
    add_common(ingest_cmd);
    add_events(ingest_cmd);
    ingest_cmd->add_option("--merged-out", extras.merged_out,
                           "also write the merged normalized events to this file");
    ingest_cmd->callback([&] { cmd_ingest(cfg, extras); });

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "generate a seeded synthetic download trace");
    add_common(simulate_cmd);
    simulate_cmd->add_option("--seed", extras.seed, "generator seed")->required();
    simulate_cmd->add_option("--from", cfg.from, "first day")->required()->check(date_arg);
    simulate_cmd->add_option("--to", cfg.to, "last day")->required()->check(date_arg);
    simulate_cmd->add_option("--weekday-mean", extras.weekday_mean, "mean weekday downloads");
    simulate_cmd->add_option("--weekend-low", extras.weekend_low, "weekend range low");
    simulate_cmd->add_option("--weekend-high", extras.weekend_high, "weekend range high");
    simulate_cmd->add_option("--popularity-skew", extras.popularity_skew,
                             "article popularity Zipf exponent");
    simulate_cmd->callback([&] { cmd_simulate(cfg, extras); });

    CLI::App* stats_cmd = app.add_subcommand("stats", "windowed download statistics");
    stats_cmd->require_subcommand(1);

    CLI::App* daily_cmd = stats_cmd->add_subcommand("daily", "raw downloads per calendar day");
    add_common(daily_cmd);
    add_events(daily_cmd);
    add_range(daily_cmd);
    daily_cmd->callback([&] { cmd_stats_daily(cfg); });

    CLI::App* top_articles_cmd =
        stats_cmd->add_subcommand("top-articles", "most downloaded articles");
    add_common(top_articles_cmd);
    add_events(top_articles_cmd);
    add_range(top_articles_cmd);
    top_articles_cmd->add_option("--top", extras.top, "entries to keep");
    top_articles_cmd->add_flag("--weighted-articles", cfg.weighted_articles,
                               "rank articles by weighted counts instead of raw");
    top_articles_cmd->callback([&] { cmd_stats_top_articles(cfg, extras); });

    CLI::App* top_keywords_cmd =
        stats_cmd->add_subcommand("top-keywords", "most downloaded keywords per window");
    add_common(top_keywords_cmd);
    add_events(top_keywords_cmd);
    add_windows(top_keywords_cmd);
    top_keywords_cmd->add_option("--top", extras.top, "keywords to keep per window");
    top_keywords_cmd->callback([&] { cmd_stats_top_keywords(cfg, extras); });

    CLI::App* trends_cmd = app.add_subcommand("trends", "detect emerging keywords");
    add_common(trends_cmd);
    add_events(trends_cmd);
    add_range(trends_cmd);
    add_trend(trends_cmd);
    trends_cmd->callback([&] { cmd_trends(cfg); });

    CLI::App* report_cmd = app.add_subcommand("report", "analysis artifacts");
    report_cmd->require_subcommand(1);

    CLI::App* scatter_cmd =
        report_cmd->add_subcommand("scatter", "papers-vs-ratio scatter data for the top keywords");
    add_common(scatter_cmd);
    add_events(scatter_cmd);
    add_range(scatter_cmd);
    add_trend(scatter_cmd);
    scatter_cmd->callback([&] { cmd_report_scatter(cfg); });

    CLI::App* tagcloud_cmd =
        report_cmd->add_subcommand("tagcloud", "relative keyword frequencies for a tag cloud");
    add_common(tagcloud_cmd);
    add_events(tagcloud_cmd);
    add_range(tagcloud_cmd);
    tagcloud_cmd->add_option("--top", extras.top, "keywords to keep");
    tagcloud_cmd->callback([&] { cmd_report_tagcloud(cfg, extras); });

    CLI::App* series_cmd =
        report_cmd->add_subcommand("series", "per-window download share of one keyword");
    add_common(series_cmd);
    add_events(series_cmd);
    add_windows(series_cmd);
    series_cmd->add_option("--keyword", extras.keyword, "keyword to trace")->required();
    series_cmd->add_flag("--raw-ratio1-denominator", cfg.raw_ratio1_denominator,
                         "divide by raw instead of weighted window totals");
    series_cmd->callback([&] { cmd_report_series(cfg, extras); });

    try {
        const std::string config_path = find_config_path(argc, argv);
        if (!config_path.empty()) apply_config(cfg, config_path);
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace trendtrace
