#include "trendtrace/simulate.hpp"

#include "trendtrace/errors.hpp"
#include "trendtrace/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace trendtrace {

namespace {

void check_config(const Corpus& corpus, const SimConfig& cfg) {
    if (corpus.empty()) throw EmptyCorpusError();
    if (cfg.start_date > cfg.end_date) throw ConfigError("start date is after end date");
    if (!(cfg.weekday_mean > 0.0)) throw ConfigError("weekday mean must be positive");
    if (!(cfg.weekend_low > 0.0) || cfg.weekend_low > cfg.weekend_high)
        throw ConfigError("weekend range must satisfy 0 < low <= high");
    if (!(cfg.popularity_skew > 0.0)) throw ConfigError("popularity skew must be positive");
}

} // namespace

std::vector<DownloadEvent> simulate_trace(const Corpus& corpus, const SimConfig& cfg) {
    check_config(corpus, cfg);

    SplitMix64 master(cfg.seed);

    // Popularity ranks: a seeded shuffle of the DOIs, then Zipf over ranks.
    std::vector<const ArticleRecord*> by_rank;
    by_rank.reserve(corpus.size());
    for (const auto& [doi, rec] : corpus.records()) by_rank.push_back(&rec);
    SplitMix64 perm_rng = master.split();
    for (std::size_t i = by_rank.size() - 1; i > 0; --i) {
        const std::size_t j = perm_rng.next_below(i + 1);
        std::swap(by_rank[i], by_rank[j]);
    }
    const ZipfSampler zipf(by_rank.size(), cfg.popularity_skew);

    const auto weekend_lo = static_cast<std::uint64_t>(std::ceil(cfg.weekend_low));
    const auto weekend_hi = static_cast<std::uint64_t>(std::floor(cfg.weekend_high));
    if (weekend_lo > weekend_hi)
        throw ConfigError("weekend range contains no integer count");

    std::vector<DownloadEvent> trace;
    for (Date day = cfg.start_date; day <= cfg.end_date; day += std::chrono::days{1}) {
        SplitMix64 day_rng = master.split();
        const std::size_t count =
            is_weekend(day)
                ? weekend_lo + day_rng.next_below(weekend_hi - weekend_lo + 1)
                : sample_poisson(day_rng, cfg.weekday_mean);

        const std::int64_t day_start = day.time_since_epoch().count() * std::int64_t{86400};
        std::vector<DownloadEvent> day_events;
        day_events.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            DownloadEvent ev;
            ev.ts = day_start + static_cast<std::int64_t>(day_rng.next_below(86400));
            const ArticleRecord* rec = by_rank[zipf.sample(day_rng)];
            ev.doi = rec->doi;
            ev.title = rec->title;
            ev.authors = rec->authors;
            day_events.push_back(std::move(ev));
        }
        std::stable_sort(day_events.begin(), day_events.end(),
                         [](const DownloadEvent& a, const DownloadEvent& b) { return a.ts < b.ts; });
        trace.insert(trace.end(), std::make_move_iterator(day_events.begin()),
                     std::make_move_iterator(day_events.end()));
    }
    return trace;
}

void write_sim_metadata(const SimConfig& cfg, std::size_t corpus_records, std::ostream& out) {
    nlohmann::ordered_json meta;
    meta["generator"] = "splitmix64";
    meta["seed"] = cfg.seed;
    meta["start_date"] = format_date(cfg.start_date);
    meta["end_date"] = format_date(cfg.end_date);
    meta["weekday_mean"] = cfg.weekday_mean;
    meta["weekend_low"] = cfg.weekend_low;
    meta["weekend_high"] = cfg.weekend_high;
    meta["popularity_skew"] = cfg.popularity_skew;
    meta["corpus_records"] = corpus_records;
    out << meta.dump(2) << '\n';
}

} // namespace trendtrace
