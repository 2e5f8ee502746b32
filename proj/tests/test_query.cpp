#include <doctest.h>

#include <random>

#include "argforge/errors.hpp"
#include "argforge/query.hpp"
#include "argforge/text.hpp"

using namespace argforge;

namespace {

Document doc(const std::string& text) { return {"d1", "t", text, Source::Other}; }

} // namespace

TEST_CASE("nuclear query parses to AND over phrase and OR") {
    auto q = parse_query("nuclear AND (energy OR fission OR power OR plant)");
    REQUIRE(q.kind() == QueryAst::Kind::And);
    REQUIRE(q.children().size() == 2);
    CHECK(q.children()[0].kind() == QueryAst::Kind::Phrase);
    CHECK(q.children()[0].tokens() == std::vector<std::string>{"nuclear"});
    const auto& disj = q.children()[1];
    REQUIRE(disj.kind() == QueryAst::Kind::Or);
    REQUIRE(disj.children().size() == 4);
    CHECK(disj.children()[1].tokens() == std::vector<std::string>{"fission"});
}

TEST_CASE("parenthesised single phrases collapse") {
    auto q = parse_query("(clone) OR (cloning)");
    REQUIRE(q.kind() == QueryAst::Kind::Or);
    REQUIRE(q.children().size() == 2);
    CHECK(q.children()[0].tokens() == std::vector<std::string>{"clone"});
    CHECK(q.children()[1].tokens() == std::vector<std::string>{"cloning"});
}

TEST_CASE("syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_query("AND nuclear"), SyntaxError);
    try {
        parse_query("AND nuclear");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 0);
    }
    CHECK_THROWS_AS(parse_query("(a OR b"), SyntaxError);
    CHECK_THROWS_AS(parse_query("a OR b)"), SyntaxError);
    CHECK_THROWS_AS(parse_query("()"), SyntaxError);
    CHECK_THROWS_AS(parse_query("a AND"), SyntaxError);
    CHECK_THROWS_AS(parse_query(""), SyntaxError);
    CHECK_THROWS_AS(parse_query("   "), SyntaxError);
}

TEST_CASE("AND binds tighter than OR") {
    auto q = parse_query("a OR b AND c");
    REQUIRE(q.kind() == QueryAst::Kind::Or);
    REQUIRE(q.children().size() == 2);
    CHECK(q.children()[0].kind() == QueryAst::Kind::Phrase);
    CHECK(q.children()[1].kind() == QueryAst::Kind::And);
}

TEST_CASE("keywords are case-sensitive uppercase") {
    // lowercase "or" is an ordinary word, which makes this query invalid
    CHECK_THROWS_AS(parse_query("(second amendment) or (2nd amendment)"), SyntaxError);
    // the corrected form parses
    auto q = parse_query("(second amendment) OR (2nd amendment)");
    CHECK(q.kind() == QueryAst::Kind::Or);
}

TEST_CASE("eval_query phrase semantics") {
    auto q = QueryAst::conjunction(
        {QueryAst::phrase({"nuclear"}),
         QueryAst::disjunction({QueryAst::phrase({"power"}), QueryAst::phrase({"plant"})})});
    CHECK(eval_query(q, doc("Nuclear power is clean")));

    CHECK_FALSE(eval_query(QueryAst::phrase({"school", "uniform"}), doc("uniform school policy")));
    CHECK(eval_query(QueryAst::phrase({"school", "uniform"}), doc("the school uniform rule")));

    // exact token match, no stemming
    CHECK_FALSE(eval_query(QueryAst::phrase({"clone"}), doc("CLONED cells")));
    CHECK(eval_query(QueryAst::phrase({"clone"}), doc("a CLONE appears")));
}

namespace {

QueryAst random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind_dist(0, depth <= 0 ? 0 : 2);
    std::uniform_int_distribution<int> width_dist(2, 3);
    std::uniform_int_distribution<int> words_dist(1, 3);
    std::uniform_int_distribution<int> letter(0, 4);
    switch (kind_dist(rng)) {
    case 1: {
        std::vector<QueryAst> kids;
        for (int i = 0, n = width_dist(rng); i < n; ++i)
            kids.push_back(random_tree(rng, depth - 1));
        return QueryAst::conjunction(std::move(kids));
    }
    case 2: {
        std::vector<QueryAst> kids;
        for (int i = 0, n = width_dist(rng); i < n; ++i)
            kids.push_back(random_tree(rng, depth - 1));
        return QueryAst::disjunction(std::move(kids));
    }
    default: {
        std::vector<std::string> words;
        for (int i = 0, n = words_dist(rng); i < n; ++i)
            words.push_back(std::string(1, static_cast<char>('a' + letter(rng))));
        return QueryAst::phrase(std::move(words));
    }
    }
}

} // namespace

TEST_CASE("print/parse round trip is structural identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        QueryAst q = random_tree(rng, 4);
        QueryAst back = parse_query(to_string(q));
        CHECK(back == q);
    }
}

TEST_CASE("eval distributes over AND/OR children") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 4);
    for (int i = 0; i < 200; ++i) {
        QueryAst a = random_tree(rng, 2);
        QueryAst b = random_tree(rng, 2);
        std::string text;
        for (int w = 0; w < 8; ++w) {
            text += static_cast<char>('a' + letter(rng));
            text += ' ';
        }
        Document d = doc(text);
        CHECK(eval_query(QueryAst::disjunction({a, b}), d) ==
              (eval_query(a, d) || eval_query(b, d)));
        CHECK(eval_query(QueryAst::conjunction({a, b}), d) ==
              (eval_query(a, d) && eval_query(b, d)));
    }
}
