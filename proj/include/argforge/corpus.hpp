#ifndef ARGFORGE_CORPUS_HPP
#define ARGFORGE_CORPUS_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "argforge/query.hpp"
#include "argforge/types.hpp"

namespace argforge {

extern const std::vector<std::string> kDefaultAbbreviations;

// Rule-based: split on {. ! ?} followed by whitespace and an uppercase
// letter, unless the terminating token is a known abbreviation.
std::vector<Sentence> split_sentences(const Document& d,
                                      const std::vector<std::string>& abbreviations =
                                          kDefaultAbbreviations);

// Keeps the first occurrence per normalized form, preserving input order.
std::vector<Sentence> dedup(const std::vector<Sentence>& sentences);

// A sentence is kept iff it contains a topic token or a synonym phrase as
// a contiguous token subsequence (case-insensitive).
std::vector<Sentence> topic_filter(const std::vector<Sentence>& sentences,
                                   const std::string& topic,
                                   const std::vector<std::string>& synonyms);

// Streams documents from line-delimited JSON shards, one document per
// line with fields {"id","text","source"}. Shards are visited in sorted
// path order so results are independent of the order they were given in.
class CorpusReader {
public:
    CorpusReader(std::vector<std::filesystem::path> shards, std::string topic);

    // Returns false at end of stream. Throws IoError with the document
    // ordinal on read or parse failure.
    bool next(Document& out);

    const std::vector<std::filesystem::path>& shards() const { return shards_; }

private:
    bool open_next_shard();

    std::vector<std::filesystem::path> shards_;
    std::string topic_;
    std::size_t shard_idx_ = 0;
    std::size_t line_no_ = 0;
    std::ifstream in_;
    bool open_ = false;
};

// First `limit` matching documents in stream order.
std::vector<Document> retrieve(CorpusReader& corpus, const QueryAst& q, std::size_t limit);

} // namespace argforge

#endif
