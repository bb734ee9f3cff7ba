#include <doctest.h>

#include "trendtrace/corpus.hpp"
#include "trendtrace/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

using namespace trendtrace;

namespace {

const char* kHeader = "DOI\tTI\tAU\tPY\tDE\tID\tSRC\n";

Corpus load_from(const std::string& body, const Normalizer& n = {}) {
    std::istringstream in(kHeader + body);
    return load_corpus(in, n);
}

/// Ten-record fixture: six keyword-bearing rows (three of them twitter),
/// three title-only rows resolved against that vocabulary, one blank-title
/// stopword case is covered separately.
std::string fixture_rows() {
    return
        "10.1/d1\tCitation studies\tA B\t1999\tcitation analysis;citations\t\twos\n"
        "10.1/d2\tTwitter in science\tC D\t2010\ttwitter;social media\t\twos\n"
        "10.1/d3\tIndex measures\tE F\t2005\th index\timpact factors\twos\n"
        "10.1/d4\tColleges\tG H\t1982\t\tinvisible colleges\twos\n"
        "10.1/d5\tDiffusion\tI J\t2001\tknowledge diffusion\t\twos\n"
        "10.1/d6\tAltmetrics now\tK L\t2012\taltmetrics\t\tonlinefirst\n"
        "10.1/d7\tCo-citation analysis and the search for invisible colleges\tM N\t2003\t\t\twos\n"
        "10.1/d8\tA network model of knowledge diffusion\tO P\t2004\t\t\twos\n"
        "10.1/d9\tTwitter adoption\tQ R\t2011\ttwitter\t\twos\n"
        "10.1/da\tMicroblogs\tS T\t2012\t\ttwitter\twos\n";
}

Normalizer fixture_normalizer() {
    Normalizer n;
    n.add_synonym("h index", "h-index");
    n.add_stopword("a");
    n.add_stopword("and");
    n.add_stopword("of");
    n.add_stopword("the");
    n.add_stopword("for");
    n.validate();
    return n;
}

} // namespace

TEST_CASE("normalize_doi lowercases, trims and strips doi.org prefixes") {
    CHECK(normalize_doi("10.1007/S11192-011-0369-Y") == "10.1007/s11192-011-0369-y");
    CHECK(normalize_doi("  10.1/x  ") == "10.1/x");
    CHECK(normalize_doi("https://doi.org/10.1/X") == "10.1/x");
    CHECK(normalize_doi("HTTP://DOI.ORG/10.1/x") == "10.1/x");
    CHECK(normalize_doi("") == "");
}

TEST_CASE("load_corpus parses well-formed rows") {
    const Corpus c = load_from(
        "10.1/a\tFirst title\tSmith J; Lee K\t2001\talpha;beta\t\twos\n"
        "10.1/b\tSecond title\t\t2010\t\tgamma\twos\n"
        "https://doi.org/10.1/C\tThird\tKim H\t2012\tdelta\t\tonlinefirst\n");
    CHECK(c.size() == 3);

    const ArticleRecord* a = c.find("10.1/a");
    REQUIRE(a != nullptr);
    CHECK(a->title == "First title");
    CHECK(a->authors == std::vector<std::string>{"Smith J", "Lee K"});
    CHECK(a->year == 2001);
    CHECK(a->author_keywords == std::vector<std::string>{"alpha", "beta"});
    CHECK(a->source == SourceClass::Indexed);

    const ArticleRecord* cc = c.find("10.1/c"); // prefix stripped, lowercased
    REQUIRE(cc != nullptr);
    CHECK(cc->source == SourceClass::OnlineFirst);

    CHECK(c.find("10.9/zz") == nullptr);
}

TEST_CASE("load_corpus rejects malformed input") {
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\t2001\tx\t\twos\n"
                              "10.1/A\tT2\tB\t2002\ty\t\twos\n"),
                    DuplicateDoiError); // DOIs match after normalization
    CHECK_THROWS_AS(load_from("\tT\tA\t2001\tx\t\twos\n"), MissingDoiError);
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\t2001\tx\twos\n"), MalformedRowError);
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\ttwo thousand\tx\t\twos\n"), MalformedRowError);
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\t2001\tx\t\tarxiv\n"), MalformedRowError);
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\t1977\tx\t\twos\n"), MalformedRowError);
    std::istringstream empty("");
    Normalizer n;
    CHECK_THROWS_AS(load_corpus(empty, n), MalformedRowError); // header required

    SUBCASE("error carries the row number") {
        try {
            load_from("10.1/a\tT\tA\t2001\tx\t\twos\n"
                      "10.1/a\tT\tA\t2002\ty\t\twos\n");
            FAIL("expected DuplicateDoiError");
        } catch (const DuplicateDoiError& e) {
            CHECK(e.doi() == "10.1/a");
            CHECK(e.row() == 2);
        }
    }
}

TEST_CASE("pre-1978 years are rejected only for indexed records") {
    CHECK_THROWS_AS(load_from("10.1/a\tT\tA\t1977\tx\t\twos\n"), MalformedRowError);
    const Corpus c = load_from("10.1/a\tT\tA\t1977\tx\t\tonlinefirst\n");
    CHECK(c.size() == 1);
    const Corpus ok = load_from("10.1/b\tT\tA\t1978\tx\t\twos\n");
    CHECK(ok.size() == 1);
}

TEST_CASE("keyword resolution unions DE and ID, normalized") {
    const Corpus c = load_from(
        "10.1/a\tT\tA\t2001\tCitations; Social  Media\ttwitter;citations\twos\n");
    CHECK(c.keywords_of("10.1/a") == KeywordSet{"citation", "social media", "twitter"});
}

TEST_CASE("blank keyword segments are dropped") {
    const Corpus c = load_from("10.1/a\tT\tA\t2001\talpha;;beta; \t\twos\n");
    CHECK(c.keywords_of("10.1/a") == KeywordSet{"alpha", "beta"});
}

TEST_CASE("title segmentation applies only when both keyword fields are empty") {
    const Normalizer n = fixture_normalizer();
    const Corpus c = load_from(fixture_rows(), n);

    SUBCASE("keyword-bearing rows never use their title") {
        // d2's title mentions science; its keywords do not.
        CHECK(c.keywords_of("10.1/d2") == KeywordSet{"twitter", "social media"});
    }

    SUBCASE("d7 picks up the invisible-college phrase from d4's vocabulary") {
        CHECK(c.keywords_of("10.1/d7") ==
              KeywordSet{"co-citation", "analysis", "search", "invisible college"});
    }

    SUBCASE("d8 picks up the knowledge-diffusion phrase from d5") {
        CHECK(c.keywords_of("10.1/d8") ==
              KeywordSet{"network", "model", "knowledge diffusion"});
    }

    SUBCASE("synonym table canonicalizes d3") {
        CHECK(c.keywords_of("10.1/d3") == KeywordSet{"h-index", "impact factor"});
    }
}

TEST_CASE("papers_with_keyword and first_year aggregate over the fixture") {
    const Normalizer n = fixture_normalizer();
    const Corpus c = load_from(fixture_rows(), n);

    CHECK(c.papers_with_keyword("twitter") == 3); // d2, d9, da
    CHECK(c.first_year("twitter") == 2010);
    CHECK(c.papers_with_keyword("invisible college") == 2); // d4, d7
    CHECK(c.first_year("invisible college") == 1982);
    CHECK(c.papers_with_keyword("no such keyword") == 0);
    CHECK(!c.first_year("no such keyword").has_value());

    SUBCASE("first_year equals the brute-force minimum over records") {
        for (const auto& [keyword, year] : c.vocabulary()) {
            int expected = 9999;
            for (const auto& [doi, rec] : c.records()) {
                if (c.keywords_of(doi).count(keyword) > 0)
                    expected = std::min(expected, rec.year);
            }
            CHECK(year == expected);
        }
    }

    SUBCASE("keyword_index pairs match record keyword sets exactly") {
        std::size_t index_pairs = 0;
        for (const auto& [keyword, dois] : c.keyword_index()) {
            index_pairs += dois.size();
            for (const auto& doi : dois) CHECK(c.keywords_of(doi).count(keyword) == 1);
        }
        std::size_t record_pairs = 0;
        for (const auto& [doi, rec] : c.records()) record_pairs += c.keywords_of(doi).size();
        CHECK(index_pairs == record_pairs);
    }
}

TEST_CASE("corpus load is independent of row order") {
    const Normalizer n = fixture_normalizer();
    const Corpus base = load_from(fixture_rows(), n);

    std::vector<std::string> rows;
    std::istringstream split(fixture_rows());
    for (std::string line; std::getline(split, line);) rows.push_back(line + "\n");
    std::mt19937 shuffle_rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(rows.begin(), rows.end(), shuffle_rng);
        std::string body;
        for (const auto& r : rows) body += r;
        const Corpus shuffled = load_from(body, n);
        CHECK(shuffled.records() == base.records());
        CHECK(shuffled.keyword_index() == base.keyword_index());
        CHECK(shuffled.vocabulary() == base.vocabulary());
    }
}

TEST_CASE("serialize then reload reproduces the corpus") {
    const Normalizer n = fixture_normalizer();
    const Corpus base = load_from(fixture_rows(), n);

    std::ostringstream out;
    serialize_corpus(base, out);
    std::istringstream in(out.str());
    const Corpus again = load_corpus(in, n);

    CHECK(again.records() == base.records());
    CHECK(again.keyword_index() == base.keyword_index());
    CHECK(again.vocabulary() == base.vocabulary());

    // Serialization itself is deterministic.
    std::ostringstream out2;
    serialize_corpus(base, out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("header-only input yields an empty corpus") {
    const Corpus c = load_from("");
    CHECK(c.empty());
    CHECK(c.size() == 0);
    CHECK(c.keywords_of("10.1/a").empty());
}
