#include "trendtrace/ingest.hpp"

#include "trendtrace/dates.hpp"
#include "trendtrace/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace trendtrace {

namespace {

DownloadEvent parse_event_line(const std::string& line, std::size_t line_no) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedEventError(line_no, e.what());
    }
    if (!obj.is_object()) throw MalformedEventError(line_no, "expected a JSON object");

    DownloadEvent ev;
    try {
        if (!obj.contains("ts") || !obj["ts"].is_string())
            throw MalformedEventError(line_no, "missing or non-string ts field");
        ev.ts = parse_timestamp(obj["ts"].get<std::string>());
    } catch (const MalformedEventError&) {
        throw;
    } catch (const Error& e) {
        throw MalformedEventError(line_no, e.what());
    }

    if (!obj.contains("doi") || !obj["doi"].is_string())
        throw MalformedEventError(line_no, "missing or non-string doi field");
    ev.doi = normalize_doi(obj["doi"].get<std::string>());
    if (ev.doi.empty()) throw MalformedEventError(line_no, "empty doi");

    if (obj.contains("title") && obj["title"].is_string())
        ev.title = obj["title"].get<std::string>();
    if (obj.contains("authors") && obj["authors"].is_array()) {
        for (const auto& a : obj["authors"]) {
            if (a.is_string()) ev.authors.push_back(a.get<std::string>());
        }
    }
    return ev;
}

} // namespace

ParseResult parse_events(std::istream& in, const ParseOptions& options) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            result.events.push_back(parse_event_line(line, line_no));
        } catch (const MalformedEventError& e) {
            if (!options.lenient) throw;
            result.warnings.push_back(e.what());
        }
    }
    return result;
}

ParseResult parse_events_file(const std::filesystem::path& path,
                              const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open event file '" + path.string() + "'");
    return parse_events(in, options);
}

void write_events(const std::vector<DownloadEvent>& events, std::ostream& out) {
    for (const auto& ev : events) {
        nlohmann::ordered_json obj;
        obj["ts"] = format_timestamp(ev.ts);
        obj["doi"] = ev.doi;
        obj["title"] = ev.title;
        obj["authors"] = ev.authors;
        out << obj.dump() << '\n';
    }
}

LinkResult link_events(std::vector<DownloadEvent> events, const Corpus& corpus,
                       const Weights& weights) {
    LinkResult result;
    result.events.reserve(events.size());
    for (auto& ev : events) {
        LinkedEvent linked;
        linked.record = corpus.find(ev.doi);
        if (linked.record == nullptr) {
            linked.weight = 0.0;
            ++result.report.unmatched;
        } else if (linked.record->source == SourceClass::Indexed) {
            linked.weight = weights.indexed;
            ++result.report.matched_indexed;
        } else {
            linked.weight = weights.online_first;
            ++result.report.matched_onlinefirst;
        }
        linked.event = std::move(ev);
        result.events.push_back(std::move(linked));
    }
    return result;
}

} // namespace trendtrace
