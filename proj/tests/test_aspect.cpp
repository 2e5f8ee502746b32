#include <doctest.h>

#include <algorithm>
#include <random>

#include "argforge/aspect.hpp"
#include "argforge/errors.hpp"
#include "argforge/text.hpp"
#include "oracles.hpp"

using namespace argforge;

namespace {

std::vector<BioTag> tags_of(const std::string& s) {
    std::vector<BioTag> out;
    for (char c : s) out.push_back(bio_from_char(c));
    return out;
}

} // namespace

TEST_CASE("extract_candidates enumerates every 1-4 gram") {
    CHECK(extract_candidates({"a", "b", "c"}).size() == 6);
    CHECK(extract_candidates({"a", "b", "c", "d", "e"}).size() == 14);
    CHECK(extract_candidates({"a"}).size() == 1);

    auto cands = extract_candidates({"a", "b", "c"});
    CHECK(cands[0].span.surface == "a");
    CHECK(cands[1].span.surface == "a b");
    CHECK(cands[2].span.surface == "a b c");
    CHECK(cands[3].span.surface == "b");
    for (const auto& c : cands) CHECK(c.score == 0.0);
}

TEST_CASE("heuristic_score divides covered tokens by candidate length") {
    std::vector<AspectSpan> gold = {{3, 2, "background checks"}};
    CHECK(heuristic_score({3, 2, ""}, gold) == doctest::Approx(1.0));
    CHECK(heuristic_score({2, 3, ""}, gold) == doctest::Approx(2.0 / 3.0));
    CHECK(heuristic_score({0, 2, ""}, gold) == doctest::Approx(0.0));
}

TEST_CASE("heuristic_score equals the counting oracle on random triples") {
    std::mt19937 rng(21);
    for (int iter = 0; iter < 300; ++iter) {
        auto tokens = oracles::random_tokens(rng, 20, 6);
        if (tokens.empty()) continue;
        auto gold = oracles::random_nonoverlapping_spans(rng, tokens, 3);
        std::uniform_int_distribution<std::size_t> start_dist(0, tokens.size() - 1);
        std::uniform_int_distribution<std::size_t> len_dist(1, 4);
        AspectSpan cand;
        cand.start = start_dist(rng);
        cand.len = std::min(len_dist(rng), tokens.size() - cand.start);
        if (cand.len == 0) continue;
        auto [covered, len] = oracles::aspect_coverage(cand, gold);
        CHECK(heuristic_score(cand, gold) ==
              static_cast<double>(covered) / static_cast<double>(len));
    }
}

TEST_CASE("filter_candidates drops stopword boundaries, punctuation and digits") {
    std::unordered_set<std::string> stop = {"the", "of", "a"};
    std::vector<AspectCandidate> cands = {
        {{0, 2, "the cost"}, 0.0},
        {{0, 1, "cost-benefit"}, 0.0},
        {{0, 2, "background checks"}, 0.0},
        {{0, 2, "checks the"}, 0.0},
        {{0, 1, "2nd"}, 0.0},
        {{0, 1, "cost"}, 0.0},
    };
    auto kept = filter_candidates(cands, stop);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].span.surface == "background checks");
    CHECK(kept[1].span.surface == "cost");
}

TEST_CASE("top_t skips overlapping lower-ranked candidates") {
    std::vector<AspectCandidate> ranked = {
        {{0, 2, "a b"}, 0.9},
        {{1, 2, "b c"}, 0.8},  // overlaps rank 1
        {{4, 1, "e"}, 0.7},
        {{6, 1, "g"}, 0.6},
    };
    auto picked = top_t(ranked, 2);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0].start == 0);
    CHECK(picked[1].start == 4);

    CHECK(top_t(ranked, 0).empty());

    std::vector<AspectCandidate> clean = {
        {{0, 1, "a"}, 0.9}, {{2, 1, "c"}, 0.8}, {{4, 1, "e"}, 0.7},
        {{6, 1, "g"}, 0.6}, {{8, 1, "i"}, 0.5},
    };
    auto two = top_t(clean, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].start == 0);
    CHECK(two[1].start == 2);
}

TEST_CASE("rank_candidates orders by score then position") {
    std::vector<AspectCandidate> cands = {
        {{4, 1, "e"}, 0.5}, {{0, 1, "a"}, 0.5}, {{2, 2, "c d"}, 0.9}, {{0, 2, "a b"}, 0.5},
    };
    rank_candidates(cands);
    CHECK(cands[0].span.start == 2);
    CHECK(cands[1].span.start == 0);
    CHECK(cands[1].span.len == 1);
    CHECK(cands[2].span.len == 2);
    CHECK(cands[3].span.start == 4);
}

TEST_CASE("bio_encode marks span starts and continuations") {
    CHECK(bio_encode(4, {{0, 2, ""}}).to_string() == "BIOO");
    CHECK(bio_encode(4, {}).to_string() == "OOOO");
    CHECK_THROWS_AS(bio_encode(4, {{0, 2, ""}, {1, 1, ""}}), std::invalid_argument);
    CHECK_THROWS_AS(bio_encode(2, {{1, 2, ""}}), std::invalid_argument);
    CHECK(bio_encode(3, {{0, 1, ""}, {1, 2, ""}}).to_string() == "BBI");
    CHECK(bio_encode(4, {{0, 2, ""}}).is_valid());
}

TEST_CASE("bio_decode recovers spans and coerces leading I") {
    std::vector<std::string> toks = {"a", "b", "c", "d"};
    auto spans = bio_decode({tags_of("BIOB")}, toks);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == AspectSpan{0, 2, "a b"});
    CHECK(spans[1] == AspectSpan{3, 1, "d"});

    CHECK(bio_decode({tags_of("OO")}, {"a", "b"}).empty());

    auto coerced = bio_decode({tags_of("IO")}, {"a", "b"});
    REQUIRE(coerced.size() == 1);
    CHECK(coerced[0] == AspectSpan{0, 1, "a"});

    auto mid = bio_decode({tags_of("OIIO")}, toks);
    REQUIRE(mid.size() == 1);
    CHECK(mid[0] == AspectSpan{1, 2, "b c"});
}

TEST_CASE("bio round trip is identity for random non-overlapping spans") {
    std::mt19937 rng(33);
    for (int iter = 0; iter < 300; ++iter) {
        auto tokens = oracles::random_tokens(rng, 30, 8);
        auto spans = oracles::random_nonoverlapping_spans(rng, tokens, 4);
        auto tags = bio_encode(tokens.size(), spans);
        CHECK(tags.is_valid());
        auto back = bio_decode(tags, tokens);
        REQUIRE(back.size() == spans.size());
        for (std::size_t i = 0; i < spans.size(); ++i) CHECK(back[i] == spans[i]);
    }
}

TEST_CASE("recall_at_k examples") {
    auto sample = [](std::vector<std::string> ranked, std::vector<std::string> gold) {
        RankedSample s;
        std::size_t pos = 0;
        for (auto& r : ranked) s.ranked.push_back({{pos++, 1, r}, 1.0});
        pos = 0;
        for (auto& g : gold) s.gold.push_back({pos++, 1, g});
        return s;
    };

    CHECK(recall_at_k({sample({"cost", "waste", "risk"}, {"cost"})}, 3) == doctest::Approx(1.0));
    CHECK(recall_at_k({sample({"cost", "risk"}, {"waste"})}, 2) == doctest::Approx(0.0));
    CHECK(recall_at_k({sample({"cost", "waste", "risk"}, {"cost"}),
                       sample({"cost", "risk"}, {"waste"})},
                      3) == doctest::Approx(0.5));

    SUBCASE("gold-free samples are excluded") {
        CHECK(recall_at_k({sample({"cost"}, {}), sample({"cost"}, {"cost"})}, 1) ==
              doctest::Approx(1.0));
        CHECK_THROWS_AS(recall_at_k({sample({"cost"}, {})}, 1), MetricError);
    }
    SUBCASE("matching is case-insensitive on surfaces") {
        CHECK(recall_at_k({sample({"Cost"}, {"cost"})}, 1) == doctest::Approx(1.0));
    }
    SUBCASE("any-hit mode scores a sample by whether anything matched") {
        auto s = sample({"cost"}, {"cost", "waste"});
        CHECK(recall_at_k({s}, 1, RecallMode::PerAspectMean) == doctest::Approx(0.5));
        CHECK(recall_at_k({s}, 1, RecallMode::PerSampleAnyHit) == doctest::Approx(1.0));
    }
}

TEST_CASE("recall_at_k is monotone in k") {
    std::mt19937 rng(55);
    std::vector<RankedSample> samples;
    for (int i = 0; i < 60; ++i) {
        auto tokens = oracles::random_tokens(rng, 12, 5);
        if (tokens.empty()) continue;
        RankedSample s;
        auto cands = extract_candidates(tokens);
        std::shuffle(cands.begin(), cands.end(), rng);
        s.ranked = cands;
        s.gold = oracles::random_nonoverlapping_spans(rng, tokens, 2);
        if (s.gold.empty()) continue;
        samples.push_back(std::move(s));
    }
    REQUIRE(!samples.empty());
    double prev = 0.0;
    for (std::size_t k = 1; k <= 16; ++k) {
        double r = recall_at_k(samples, k);
        CHECK(r >= prev - 1e-12);
        prev = r;
    }
}

TEST_CASE("token_f1_macro on the worked example") {
    // gold has 2 B, 1 I, 7 O; prediction is all O
    std::vector<BioTag> gold = tags_of("BIOOOBOOOO");
    std::vector<BioTag> pred = tags_of("OOOOOOOOOO");
    auto report = token_f1_macro({pred}, {gold});
    CHECK(report.per_class["O"].precision == doctest::Approx(0.7));
    CHECK(report.per_class["O"].recall == doctest::Approx(1.0));
    CHECK(report.per_class["O"].f1 == doctest::Approx(0.8235).epsilon(1e-3));
    CHECK(report.per_class["B"].f1 == doctest::Approx(0.0));
    CHECK(report.metrics["f1_macro"] == doctest::Approx(0.2745).epsilon(1e-3));
}

TEST_CASE("token_f1_macro identity and shape checks") {
    std::vector<BioTag> gold = tags_of("BIOO");
    CHECK(token_f1_macro({gold}, {gold}).metrics["f1_macro"] == doctest::Approx(1.0));
    CHECK_THROWS_AS(token_f1_macro({gold}, {tags_of("BIO")}), std::invalid_argument);
    CHECK_THROWS_AS(token_f1_macro({gold, gold}, {gold}), std::invalid_argument);
}

TEST_CASE("token_f1_macro equals the confusion-matrix oracle on random sequences") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> tag_dist(0, 2);
    std::uniform_int_distribution<std::size_t> len_dist(1, 20);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = len_dist(rng);
        std::vector<BioTag> pred(n), gold(n);
        for (std::size_t i = 0; i < n; ++i) {
            pred[i] = static_cast<BioTag>(tag_dist(rng));
            gold[i] = static_cast<BioTag>(tag_dist(rng));
        }
        auto report = token_f1_macro({pred}, {gold});
        CHECK(report.metrics["f1_macro"] == doctest::Approx(oracles::macro_f1(pred, gold)));
    }
}

TEST_CASE("filter never drops alphabetic gold aspects with clean boundaries") {
    auto stop = load_word_set("data/stopwords_en.txt");
    // gold aspect surfaces from the bundled dataset fixture
    for (const char* aspect :
         {"cost", "background checks", "waste", "individuality", "murder rate"}) {
        auto toks = tokenize(aspect);
        std::vector<AspectCandidate> cands = {{{0, toks.size(), aspect}, 1.0}};
        auto kept = filter_candidates(cands, stop);
        REQUIRE(kept.size() == 1);
    }
}
