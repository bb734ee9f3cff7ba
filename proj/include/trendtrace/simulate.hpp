#pragma once

#include "trendtrace/corpus.hpp"
#include "trendtrace/dates.hpp"
#include "trendtrace/ingest.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace trendtrace {

/// Synthetic trace parameters. Weekday volumes are Poisson around
/// weekday_mean; weekend volumes are uniform integers in
/// [weekend_low, weekend_high]; article popularity is Zipf with the given
/// exponent over a seed-derived permutation of the corpus DOIs.
struct SimConfig {
    std::uint64_t seed = 0;
    Date start_date;
    Date end_date;
    double weekday_mean = 1000.0;
    double weekend_low = 400.0;
    double weekend_high = 800.0;
    double popularity_skew = 1.0;
};

/// Generates a download trace: one SplitMix64 stream per day split off a
/// master stream, timestamps uniform within the day, events sorted by
/// timestamp. Identical seed and config give an identical trace.
/// Throws EmptyCorpusError / ConfigError.
std::vector<DownloadEvent> simulate_trace(const Corpus& corpus, const SimConfig& cfg);

/// Sidecar metadata describing the generated trace.
void write_sim_metadata(const SimConfig& cfg, std::size_t corpus_records, std::ostream& out);

} // namespace trendtrace
