#ifndef ARGFORGE_DATASET_HPP
#define ARGFORGE_DATASET_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "argforge/types.hpp"

namespace argforge {

// One record of the published aspect dataset. aspect_pos entries are
// "(begin,length)" strings with character offsets into `sentence`.
struct AspectDatasetRecord {
    std::string hash;
    std::vector<std::pair<std::size_t, std::size_t>> char_spans;  // (begin, length)
    std::vector<std::string> aspect_strings;
    std::string stance;
    std::string topic;
    std::string sentence;
    std::vector<std::string> tokens;
    std::vector<AspectSpan> token_spans;  // char offsets mapped to tokens
};

struct AspectDatasetStats {
    std::size_t records = 0;
    std::size_t offset_failures = 0;           // substring != aspect_pos_string
    std::vector<std::string> failure_details;  // first few, for diagnostics
};

// Loads the dataset and validates that extracting (begin,length) from the
// sentence reproduces aspect_pos_string byte-exactly for every record.
std::vector<AspectDatasetRecord> load_aspect_dataset(const std::filesystem::path& path,
                                                     AspectDatasetStats* stats = nullptr);

// Arguments with topic/stance/aspect spans, as used by aspect_frequency.
std::vector<Argument> dataset_to_arguments(const std::vector<AspectDatasetRecord>& records);

} // namespace argforge

#endif
