#pragma once

#include "trendtrace/corpus.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace trendtrace {

/// One observed download from the realtime feed.
struct DownloadEvent {
    std::int64_t ts = 0; // Unix seconds, UTC
    std::string doi;     // normalized
    std::string title;
    std::vector<std::string> authors;

    bool operator==(const DownloadEvent&) const = default;
};

struct ParseOptions {
    /// Skip malformed lines instead of throwing, collecting warnings.
    bool lenient = false;
};

struct ParseResult {
    std::vector<DownloadEvent> events;
    std::vector<std::string> warnings; // lenient mode only
};

/// Parses the JSON Lines event format: objects with ts (ISO-8601 UTC),
/// doi, title, authors. Unknown fields ignored; title and authors may be
/// absent. Throws MalformedEventError in strict mode.
ParseResult parse_events(std::istream& in, const ParseOptions& options = {});
ParseResult parse_events_file(const std::filesystem::path& path,
                              const ParseOptions& options = {});

/// Writes events in the same JSON Lines format, one object per line with
/// fields ts, doi, title, authors in that order.
void write_events(const std::vector<DownloadEvent>& events, std::ostream& out);

/// Source-class weights applied when linking.
struct Weights {
    double indexed = 1.0;
    double online_first = 0.0;
};

/// Event joined to its corpus record. record stays null for DOIs the
/// corpus does not carry; such events keep weight 0 and count as
/// unmatched. Holds a pointer into the corpus, which must outlive it.
struct LinkedEvent {
    DownloadEvent event;
    const ArticleRecord* record = nullptr;
    double weight = 0.0;
};

struct LinkReport {
    std::size_t matched_indexed = 0;
    std::size_t matched_onlinefirst = 0;
    std::size_t unmatched = 0;
};

struct LinkResult {
    std::vector<LinkedEvent> events; // same order and length as the input
    LinkReport report;
};

/// Joins each event to the corpus by exact DOI match and attaches the
/// source-class weight. Never drops or reorders events.
LinkResult link_events(std::vector<DownloadEvent> events, const Corpus& corpus,
                       const Weights& weights = {});

} // namespace trendtrace
