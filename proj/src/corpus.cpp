#include "argforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include <json.hpp>

#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

const std::vector<std::string> kDefaultAbbreviations = {
    "Dr.", "Mr.", "Mrs.", "Ms.", "Prof.", "Sr.", "Jr.", "St.",
    "U.S.", "U.K.", "U.N.", "e.g.", "i.e.", "No.", "vs.", "etc.", "approx.",
};

namespace {

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// The whitespace-delimited token ending at (and including) position i.
std::string token_ending_at(const std::string& text, std::size_t i) {
    std::size_t b = i;
    while (b > 0 && !std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(b, i - b + 1);
}

std::string clean_sentence(std::string s) {
    for (auto& c : s)
        if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    // trim
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace

std::vector<Sentence> split_sentences(const Document& d,
                                      const std::vector<std::string>& abbreviations) {
    std::unordered_set<std::string> abbrev(abbreviations.begin(), abbreviations.end());
    const std::string& text = d.text;
    std::vector<Sentence> out;
    std::size_t start = 0;

    auto emit = [&](std::size_t begin, std::size_t end) {
        std::string s = clean_sentence(text.substr(begin, end - begin));
        if (!s.empty()) out.push_back({s, normalize_text(s), d.id, d.topic});
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_terminal(text[i])) continue;
        // require whitespace then an uppercase letter
        std::size_t j = i + 1;
        if (j >= text.size() || !std::isspace(static_cast<unsigned char>(text[j]))) continue;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= text.size() || !std::isupper(static_cast<unsigned char>(text[j]))) continue;
        if (text[i] == '.' && abbrev.count(token_ending_at(text, i))) continue;
        emit(start, i + 1);
        start = j;
        i = j - 1;
    }
    if (start < text.size()) emit(start, text.size());
    return out;
}

std::vector<Sentence> dedup(const std::vector<Sentence>& sentences) {
    std::vector<Sentence> out;
    std::unordered_set<std::string> seen;
    out.reserve(sentences.size());
    for (const auto& s : sentences)
        if (seen.insert(s.normalized).second) out.push_back(s);
    return out;
}

std::vector<Sentence> topic_filter(const std::vector<Sentence>& sentences,
                                   const std::string& topic,
                                   const std::vector<std::string>& synonyms) {
    std::vector<std::string> topic_toks = lower_tokens(topic);
    std::unordered_set<std::string> topic_tok_set(topic_toks.begin(), topic_toks.end());
    std::vector<std::vector<std::string>> syn_toks;
    syn_toks.reserve(synonyms.size());
    for (const auto& s : synonyms) syn_toks.push_back(lower_tokens(s));

    std::vector<Sentence> out;
    for (const auto& s : sentences) {
        auto toks = lower_tokens(s.text);
        bool keep = std::any_of(toks.begin(), toks.end(), [&](const std::string& t) {
            return topic_tok_set.count(t) > 0;
        });
        if (!keep) {
            for (const auto& syn : syn_toks) {
                if (contains_subsequence(toks, syn)) {
                    keep = true;
                    break;
                }
            }
        }
        if (keep) out.push_back(s);
    }
    return out;
}

CorpusReader::CorpusReader(std::vector<std::filesystem::path> shards, std::string topic)
    : shards_(std::move(shards)), topic_(std::move(topic)) {
    std::sort(shards_.begin(), shards_.end());
}

bool CorpusReader::open_next_shard() {
    if (shard_idx_ >= shards_.size()) return false;
    in_.close();
    in_.clear();
    in_.open(shards_[shard_idx_]);
    if (!in_) throw IoError("cannot open corpus shard " + shards_[shard_idx_].string());
    line_no_ = 0;
    open_ = true;
    return true;
}

bool CorpusReader::next(Document& out) {
    while (true) {
        if (!open_) {
            if (shard_idx_ >= shards_.size()) return false;
            if (!open_next_shard()) return false;
        }
        std::string line;
        if (!std::getline(in_, line)) {
            open_ = false;
            ++shard_idx_;
            continue;
        }
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
            out.id = rec.at("id").get<std::string>();
            out.text = rec.at("text").get<std::string>();
            out.source = source_from_string(rec.value("source", "other"));
        } catch (const nlohmann::json::exception& e) {
            throw IoError(shards_[shard_idx_].string() + ": document " +
                          std::to_string(line_no_) + ": " + e.what());
        }
        out.topic = topic_;
        if (normalize_whitespace(out.text).empty()) continue;
        return true;
    }
}

std::vector<Document> retrieve(CorpusReader& corpus, const QueryAst& q, std::size_t limit) {
    std::vector<Document> out;
    if (limit == 0) return out;
    Document d;
    while (out.size() < limit && corpus.next(d))
        if (eval_query(q, d)) out.push_back(d);
    return out;
}

} // namespace argforge
