#ifndef ARGFORGE_TRAINDOC_HPP
#define ARGFORGE_TRAINDOC_HPP

#include <map>
#include <string>
#include <vector>

#include "argforge/types.hpp"

namespace argforge {

// Lowercase, Porter-stem each token, rejoin with single spaces.
std::string stem_key(const std::string& aspect);

struct GroupKey {
    std::string topic;
    Stance stance = Stance::Pro;
    std::string stem;

    auto operator<=>(const GroupKey&) const = default;
};

struct ArgGroup {
    GroupKey key;
    std::vector<Argument> members;                 // descending confidence, then input order
    std::map<std::string, std::size_t> surfaces;   // lowercase aspect surface -> occurrences
};

// An argument with k distinct aspect stems joins k groups. Member order
// is descending confidence with input order breaking ties.
std::map<GroupKey, ArgGroup> group_arguments(const std::vector<Argument>& args);

struct BoundsConfig {
    std::size_t min_args = 15;
    std::size_t max_args = 1500;
    std::size_t cap_per_topic_stance = 100000;
    // When set, the cap counts unique sentences instead of group
    // memberships (an argument in several documents counts once).
    bool cap_unique = false;
};

struct TrainingDocument {
    GroupKey key;
    std::vector<Argument> arguments;
    std::string control_aspect;  // most frequent surface for the stem
};

// Drops groups under min, truncates over max keeping highest confidence,
// then admits documents per (topic, stance) in descending size order,
// skipping any whose size would push the summed argument count past the
// cap. Output is ordered by (topic, stance, size desc, stem).
std::vector<TrainingDocument> apply_bounds(const std::map<GroupKey, ArgGroup>& groups,
                                           const BoundsConfig& bounds);

struct Chunk {
    std::string control_code;
    std::string text;  // seq_len tokens at most
};

// Concatenates argument texts, windows into seq_len-token blocks (the
// last may be short) and prepends the rendered control code to each.
// Throws std::invalid_argument on an empty document or seq_len < 8.
std::vector<Chunk> chunk_document(const TrainingDocument& doc, std::size_t seq_len,
                                  const std::string& punct = ".");

} // namespace argforge

#endif
