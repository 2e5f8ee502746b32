#ifndef ARGFORGE_QUERY_HPP
#define ARGFORGE_QUERY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "argforge/types.hpp"

namespace argforge {

// Boolean retrieval query. Grammar:
//   expr   := disj
//   disj   := conj (OR conj)*
//   conj   := atom (AND atom)*
//   atom   := '(' expr ')' | phrase
//   phrase := one or more words
// AND binds tighter than OR; keywords are case-sensitive uppercase.
class QueryAst {
public:
    enum class Kind { Phrase, And, Or };

    static QueryAst phrase(std::vector<std::string> tokens);
    static QueryAst conjunction(std::vector<QueryAst> children);
    static QueryAst disjunction(std::vector<QueryAst> children);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<QueryAst>& children() const { return children_; }

    bool operator==(const QueryAst& o) const;

private:
    QueryAst() = default;
    Kind kind_ = Kind::Phrase;
    std::vector<std::string> tokens_;    // phrase only, lowercased
    std::vector<QueryAst> children_;     // and/or only, >= 2
};

// Throws SyntaxError (with byte offset) on unbalanced parentheses,
// dangling operators, or empty phrases.
QueryAst parse_query(std::string_view raw);

// Canonical printed form; parse_query(to_string(q)) == q.
std::string to_string(const QueryAst& q);

// Phrase matches iff its tokens occur as a contiguous, case-insensitive
// token subsequence of the document text.
bool eval_query(const QueryAst& q, const Document& d);
bool eval_query_tokens(const QueryAst& q, const std::vector<std::string>& lower_toks);

} // namespace argforge

#endif
