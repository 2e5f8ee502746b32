#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "argforge/corpus.hpp"
#include "argforge/errors.hpp"

using namespace argforge;

namespace {

Document doc(const std::string& text) { return {"d1", "nuclear energy", text, Source::Cc}; }

std::vector<std::string> texts(const std::vector<Sentence>& sentences) {
    std::vector<std::string> out;
    for (const auto& s : sentences) out.push_back(s.text);
    return out;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("split on terminal punctuation before uppercase") {
    auto s = split_sentences(doc("It is safe. It is cheap."));
    CHECK(texts(s) == std::vector<std::string>{"It is safe.", "It is cheap."});
    CHECK(s[0].doc_id == "d1");
    CHECK(s[0].topic == "nuclear energy");
}

TEST_CASE("abbreviations do not split") {
    auto s = split_sentences(doc("Dr. Smith agrees. It works."));
    REQUIRE(s.size() == 2);
    CHECK(s[0].text == "Dr. Smith agrees.");
    auto us = split_sentences(doc("The U.S. Government objects. Nobody moved."));
    REQUIRE(us.size() == 2);
    CHECK(us[0].text == "The U.S. Government objects.");
}

TEST_CASE("degenerate inputs yield at most one sentence") {
    CHECK(texts(split_sentences(doc("no terminal punctuation"))) ==
          std::vector<std::string>{"no terminal punctuation"});
    CHECK(split_sentences(doc("   ")).empty());
    auto s = split_sentences(doc("lowercase. after period"));
    CHECK(s.size() == 1);  // no uppercase after the period
}

TEST_CASE("question and exclamation marks split too") {
    auto s = split_sentences(doc("Is it safe? Some say so! Others doubt it."));
    CHECK(s.size() == 3);
}

TEST_CASE("newlines never survive into sentences") {
    auto s = split_sentences(doc("First half\ncontinues here. Second one."));
    REQUIRE(s.size() == 2);
    CHECK(s[0].text.find('\n') == std::string::npos);
}

TEST_CASE("dedup keeps the first occurrence per normalized form") {
    Document d = doc("x");
    std::vector<Sentence> in = {
        {"Guns kill.", "guns kill.", "a", "t"},
        {"guns  kill.", "guns kill.", "b", "t"},
        {"Another.", "another.", "c", "t"},
    };
    auto out = dedup(in);
    REQUIRE(out.size() == 2);
    CHECK(out[0].doc_id == "a");
    CHECK(out[1].text == "Another.");

    SUBCASE("idempotent") { CHECK(dedup(out).size() == out.size()); }
    SUBCASE("all distinct is identity") {
        std::vector<Sentence> distinct = {{"A.", "a.", "x", "t"}, {"B.", "b.", "y", "t"}};
        CHECK(dedup(distinct).size() == 2);
    }
    SUBCASE("three copies and one distinct") {
        std::vector<Sentence> mixed = {in[0], in[0], in[0], in[2]};
        CHECK(dedup(mixed).size() == 2);
    }
}

TEST_CASE("topic_filter keeps sentences with topic tokens or synonym phrases") {
    std::vector<Sentence> in = {
        {"Fission reactors are efficient.", "fission reactors are efficient.", "a", "t"},
        {"It is efficient.", "it is efficient.", "b", "t"},
        {"The wage floor rose.", "the wage floor rose.", "c", "t"},
    };
    auto kept = topic_filter(in, "nuclear energy", {"fission", "fusion", "atomic energy"});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].doc_id == "a");

    auto wage = topic_filter(in, "minimum wage", {});
    REQUIRE(wage.size() == 1);
    CHECK(wage[0].doc_id == "c");

    SUBCASE("output is a subsequence of the input") {
        auto all = topic_filter(in, "nuclear energy", {"fission", "efficient", "wage"});
        CHECK(all.size() == 3);  // synonyms covering every sentence make it the identity
    }
}

TEST_CASE("retrieve returns matching documents in stream order") {
    std::string corpus;
    for (int i = 0; i < 10; ++i) {
        bool match = i == 2 || i == 5 || i == 7;
        corpus += std::string("{\"id\": \"d") + std::to_string(i) + "\", \"text\": \"" +
                  (match ? "nuclear energy here" : "something else") + "\", \"source\": \"cc\"}\n";
    }
    TempFile f("argforge_corpus_test.jsonl", corpus);
    auto q = parse_query("nuclear AND energy");

    SUBCASE("fewer matches than limit") {
        CorpusReader reader({f.path}, "nuclear energy");
        auto docs = retrieve(reader, q, 5);
        REQUIRE(docs.size() == 3);
        CHECK(docs[0].id == "d2");
        CHECK(docs[1].id == "d5");
        CHECK(docs[2].id == "d7");
        CHECK(docs[0].topic == "nuclear energy");
    }
    SUBCASE("limit truncates") {
        CorpusReader reader({f.path}, "nuclear energy");
        auto docs = retrieve(reader, q, 2);
        REQUIRE(docs.size() == 2);
        CHECK(docs[1].id == "d5");
    }
}

TEST_CASE("retrieve on an empty corpus is empty") {
    TempFile f("argforge_corpus_empty.jsonl", "");
    CorpusReader reader({f.path}, "t");
    CHECK(retrieve(reader, parse_query("x"), 5).empty());
}

TEST_CASE("corpus parse failures report the document ordinal") {
    TempFile f("argforge_corpus_bad.jsonl",
               "{\"id\": \"d0\", \"text\": \"fine\", \"source\": \"cc\"}\nnot json\n");
    CorpusReader reader({f.path}, "t");
    Document d;
    CHECK(reader.next(d));
    try {
        reader.next(d);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("document 2") != std::string::npos);
    }
}

TEST_CASE("shards are read in sorted order regardless of argument order") {
    TempFile a("argforge_shard_a.jsonl", "{\"id\": \"a\", \"text\": \"match word\"}\n");
    TempFile b("argforge_shard_b.jsonl", "{\"id\": \"b\", \"text\": \"match word\"}\n");
    auto q = parse_query("match");
    CorpusReader forward({a.path, b.path}, "t");
    CorpusReader backward({b.path, a.path}, "t");
    auto d1 = retrieve(forward, q, 10);
    auto d2 = retrieve(backward, q, 10);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].id == d2[0].id);
    CHECK(d1[1].id == d2[1].id);
}
