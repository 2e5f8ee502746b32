#include "argforge/query.hpp"

#include <cctype>

#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

QueryAst QueryAst::phrase(std::vector<std::string> tokens) {
    QueryAst q;
    q.kind_ = Kind::Phrase;
    q.tokens_ = std::move(tokens);
    for (auto& t : q.tokens_) t = to_lower(t);
    return q;
}

QueryAst QueryAst::conjunction(std::vector<QueryAst> children) {
    QueryAst q;
    q.kind_ = Kind::And;
    q.children_ = std::move(children);
    return q;
}

QueryAst QueryAst::disjunction(std::vector<QueryAst> children) {
    QueryAst q;
    q.kind_ = Kind::Or;
    q.children_ = std::move(children);
    return q;
}

bool QueryAst::operator==(const QueryAst& o) const {
    return kind_ == o.kind_ && tokens_ == o.tokens_ && children_ == o.children_;
}

namespace {

struct Token {
    enum class Type { Word, And, Or, LParen, RParen, End };
    Type type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view raw) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '(') {
            out.push_back({Token::Type::LParen, "(", i});
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({Token::Type::RParen, ")", i});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) &&
               raw[j] != '(' && raw[j] != ')')
            ++j;
        std::string word(raw.substr(i, j - i));
        if (word == "AND")
            out.push_back({Token::Type::And, word, i});
        else if (word == "OR")
            out.push_back({Token::Type::Or, word, i});
        else
            out.push_back({Token::Type::Word, word, i});
        i = j;
    }
    out.push_back({Token::Type::End, "", raw.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view raw) : toks_(lex(raw)) {}

    QueryAst parse() {
        QueryAst q = disj();
        if (peek().type != Token::Type::End) {
            if (peek().type == Token::Type::RParen)
                throw SyntaxError("unbalanced ')'", peek().offset);
            throw SyntaxError("unexpected token '" + peek().text + "'", peek().offset);
        }
        return q;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    QueryAst disj() {
        std::vector<QueryAst> children;
        children.push_back(conj());
        while (peek().type == Token::Type::Or) {
            advance();
            children.push_back(conj());
        }
        if (children.size() == 1) return std::move(children.front());
        return QueryAst::disjunction(std::move(children));
    }

    QueryAst conj() {
        std::vector<QueryAst> children;
        children.push_back(atom());
        while (peek().type == Token::Type::And) {
            advance();
            children.push_back(atom());
        }
        if (children.size() == 1) return std::move(children.front());
        return QueryAst::conjunction(std::move(children));
    }

    QueryAst atom() {
        const Token& t = peek();
        switch (t.type) {
        case Token::Type::LParen: {
            advance();
            QueryAst inner = disj();
            if (peek().type != Token::Type::RParen)
                throw SyntaxError("unbalanced '('", t.offset);
            advance();
            return inner;
        }
        case Token::Type::Word:
            return phrase();
        case Token::Type::And:
        case Token::Type::Or:
            throw SyntaxError("dangling operator '" + t.text + "'", t.offset);
        case Token::Type::RParen:
            throw SyntaxError("empty phrase before ')'", t.offset);
        case Token::Type::End:
            throw SyntaxError("empty phrase at end of query", t.offset);
        }
        throw SyntaxError("unexpected token", t.offset);
    }

    QueryAst phrase() {
        std::vector<std::string> words;
        while (peek().type == Token::Type::Word) words.push_back(advance().text);
        return QueryAst::phrase(std::move(words));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void print_node(const QueryAst& q, std::string& out) {
    switch (q.kind()) {
    case QueryAst::Kind::Phrase:
        out += join_tokens(q.tokens());
        return;
    case QueryAst::Kind::And:
    case QueryAst::Kind::Or: {
        const char* op = q.kind() == QueryAst::Kind::And ? " AND " : " OR ";
        out += '(';
        for (std::size_t i = 0; i < q.children().size(); ++i) {
            if (i) out += op;
            print_node(q.children()[i], out);
        }
        out += ')';
        return;
    }
    }
}

} // namespace

QueryAst parse_query(std::string_view raw) {
    if (normalize_whitespace(raw).empty()) throw SyntaxError("empty query", 0);
    return Parser(raw).parse();
}

std::string to_string(const QueryAst& q) {
    std::string out;
    print_node(q, out);
    return out;
}

bool eval_query_tokens(const QueryAst& q, const std::vector<std::string>& lower_toks) {
    switch (q.kind()) {
    case QueryAst::Kind::Phrase: {
        // Phrase tokens are stored lowercase but may contain punctuation
        // (e.g. "2nd"); match against the tokenized form of the phrase.
        auto needle = lower_tokens(join_tokens(q.tokens()));
        return contains_subsequence(lower_toks, needle);
    }
    case QueryAst::Kind::And:
        for (const auto& c : q.children())
            if (!eval_query_tokens(c, lower_toks)) return false;
        return true;
    case QueryAst::Kind::Or:
        for (const auto& c : q.children())
            if (eval_query_tokens(c, lower_toks)) return true;
        return false;
    }
    return false;
}

bool eval_query(const QueryAst& q, const Document& d) {
    return eval_query_tokens(q, lower_tokens(d.text));
}

} // namespace argforge
