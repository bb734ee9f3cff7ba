#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendtrace {

/// Base class for all pipeline errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration input (normalizer files, simulator parameters, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Two corpus rows share the same DOI.
class DuplicateDoiError : public Error {
public:
    DuplicateDoiError(std::string doi, std::size_t row)
        : Error("duplicate DOI '" + doi + "' at row " + std::to_string(row)),
          doi_(std::move(doi)), row_(row) {}

    const std::string& doi() const { return doi_; }
    std::size_t row() const { return row_; }

private:
    std::string doi_;
    std::size_t row_;
};

/// Corpus row with an empty DOI field.
class MissingDoiError : public Error {
public:
    explicit MissingDoiError(std::size_t row)
        : Error("missing DOI at row " + std::to_string(row)), row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// Corpus row that cannot be parsed (column count, year, source class).
class MalformedRowError : public Error {
public:
    MalformedRowError(std::size_t row, const std::string& reason)
        : Error("malformed row " + std::to_string(row) + ": " + reason), row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// Event line that cannot be parsed (bad timestamp, missing doi, bad JSON).
class MalformedEventError : public Error {
public:
    MalformedEventError(std::size_t line, const std::string& reason)
        : Error("malformed event at line " + std::to_string(line) + ": " + reason),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Keyword that is empty after trimming.
class EmptyKeywordError : public Error {
public:
    EmptyKeywordError() : Error("keyword is empty after normalization") {}
};

/// Ratio denominator of zero downloads.
class ZeroTotalError : public Error {
public:
    ZeroTotalError() : Error("total downloads is zero") {}
};

/// Keyword downloaded but carried by no corpus paper.
class NoPapersError : public Error {
public:
    explicit NoPapersError(const std::string& keyword = "")
        : Error(keyword.empty() ? std::string("keyword has no corpus papers")
                                : "keyword '" + keyword + "' has no corpus papers"),
          keyword_(keyword) {}

    const std::string& keyword() const { return keyword_; }

private:
    std::string keyword_;
};

/// Simulation requested over an empty corpus.
class EmptyCorpusError : public Error {
public:
    EmptyCorpusError() : Error("corpus is empty") {}
};

} // namespace trendtrace
