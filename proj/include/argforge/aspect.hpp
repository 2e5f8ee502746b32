#ifndef ARGFORGE_ASPECT_HPP
#define ARGFORGE_ASPECT_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "argforge/types.hpp"

namespace argforge {

enum class BioTag : std::uint8_t { B, I, O };

char bio_char(BioTag t);
BioTag bio_from_char(char c);

struct BioTags {
    std::vector<BioTag> tags;

    // Canonical encodings never have I after O or at the start.
    bool is_valid() const;
    std::string to_string() const;
};

// Every contiguous 1..4-gram, ordered by (start, len), scores unset.
std::vector<AspectCandidate> extract_candidates(const std::vector<std::string>& tokens);

// Fraction of the candidate's tokens covered by any gold span.
double heuristic_score(const AspectSpan& candidate, const std::vector<AspectSpan>& gold);

// Drops candidates that begin or end with a stopword, or contain a token
// with punctuation or a digit.
std::vector<AspectCandidate> filter_candidates(const std::vector<AspectCandidate>& cands,
                                               const std::unordered_set<std::string>& stopwords);

// Stable sort by descending score, ties by (start, len) ascending.
void rank_candidates(std::vector<AspectCandidate>& cands);

// First t non-overlapping spans of a ranked candidate list; overlapping
// lower-ranked candidates are skipped.
std::vector<AspectSpan> top_t(const std::vector<AspectCandidate>& ranked, std::size_t t);

// Throws std::invalid_argument on overlapping or out-of-range spans.
BioTags bio_encode(std::size_t token_count, const std::vector<AspectSpan>& spans);

// Maximal B(I)* runs become spans; an I that cannot continue a span is
// coerced to B.
std::vector<AspectSpan> bio_decode(const BioTags& tags, const std::vector<std::string>& tokens);

enum class RecallMode { PerAspectMean, PerSampleAnyHit };

struct RankedSample {
    std::vector<AspectCandidate> ranked;
    std::vector<AspectSpan> gold;
};

// Gold matches are exact surface-string equality after lowercasing.
// Samples with no gold spans are excluded; throws MetricError if every
// sample is excluded.
double recall_at_k(const std::vector<RankedSample>& samples, std::size_t k,
                   RecallMode mode = RecallMode::PerAspectMean);

// Flattens all sequences and computes per-class P/R/F1 for {B,I,O}; the
// macro average weights the three classes equally, counting absent
// classes as 0.
EvalReport token_f1_macro(const std::vector<std::vector<BioTag>>& pred,
                          const std::vector<std::vector<BioTag>>& gold);

} // namespace argforge

#endif
